//! Flat tangles: crossingless, circle-free diagrams in a rectangle with
//! `2m` marked points on the top edge and `2n` on the bottom edge.
//!
//! Unbending rotates the top edge down past the left side, so a flat
//! tangle is stored as the crossingless matching it becomes on a line of
//! `2(m+n)` points: top point `i` lands at `2m - i + 1` (reversed) and
//! bottom point `j` at `2m + j`. This is a bijection, so enumeration and
//! equality are inherited from [`Matching`].

use std::fmt;

use super::{glue_circles, Matching};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatTangle {
    m: usize,
    n: usize,
    unbent: Matching,
}

/// A through arc of a flat tangle: its top and bottom endpoint indices,
/// plus the arc it becomes on the unbent line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ThroughArc {
    pub top: usize,
    pub bottom: usize,
    pub line_arc: (usize, usize),
}

impl FlatTangle {
    /// Wrap an already-unbent matching of `2(m+n)` points.
    pub fn from_unbent(m: usize, n: usize, unbent: Matching) -> Result<Self, String> {
        if unbent.points() != 2 * (m + n) {
            return Err(format!(
                "matching has {} points, expected {}",
                unbent.points(),
                2 * (m + n)
            ));
        }
        Ok(FlatTangle { m, n, unbent })
    }

    /// Build from arcs given in tangle coordinates: `true` marks a top
    /// point, `false` a bottom point.
    pub fn from_pairs(
        m: usize,
        n: usize,
        pairs: Vec<((bool, usize), (bool, usize))>,
    ) -> Result<Self, String> {
        let map = |(is_top, idx): (bool, usize)| -> Result<usize, String> {
            if is_top {
                if idx == 0 || idx > 2 * m {
                    return Err(format!("top index {idx} out of range"));
                }
                Ok(2 * m - idx + 1)
            } else {
                if idx == 0 || idx > 2 * n {
                    return Err(format!("bottom index {idx} out of range"));
                }
                Ok(2 * m + idx)
            }
        };
        let mut arcs = Vec::new();
        for (a, b) in pairs {
            let (pa, pb) = (map(a)?, map(b)?);
            arcs.push((pa.min(pb), pa.max(pb)));
        }
        Self::from_unbent(m, n, Matching::from_arcs(arcs)?)
    }

    /// The identity tangle on `2m` strands.
    pub fn identity(m: usize) -> Self {
        let arcs = (1..=2 * m).map(|i| (2 * m - i + 1, 2 * m + i)).collect();
        FlatTangle {
            m,
            n: m,
            unbent: Matching::from_arcs(arcs).expect("identity tangle is planar"),
        }
    }

    /// All flat `(2m, 2n)`-tangles.
    pub fn all(m: usize, n: usize) -> Vec<FlatTangle> {
        Matching::all(m + n)
            .into_iter()
            .map(|unbent| FlatTangle { m, n, unbent })
            .collect()
    }

    pub fn top_points(&self) -> usize {
        2 * self.m
    }

    pub fn bottom_points(&self) -> usize {
        2 * self.n
    }

    pub fn unbent(&self) -> &Matching {
        &self.unbent
    }

    /// Arcs running from the top edge to the bottom edge, sorted by top
    /// index.
    pub fn through_arcs(&self) -> Vec<ThroughArc> {
        let mut out: Vec<ThroughArc> = self
            .unbent
            .arcs()
            .iter()
            .filter(|&&(l, r)| l <= 2 * self.m && r > 2 * self.m)
            .map(|&(l, r)| ThroughArc {
                top: 2 * self.m - l + 1,
                bottom: r - 2 * self.m,
                line_arc: (l, r),
            })
            .collect();
        out.sort_by_key(|t| t.top);
        out
    }

    /// The through-strand count `w`.
    pub fn through_degree(&self) -> usize {
        self.through_arcs().len()
    }

    /// Close the tangle with a matching below its bottom edge and one
    /// above its top edge; returns the circles in unbent coordinates.
    pub fn close(&self, bottom: &Matching, top: &Matching) -> Vec<Vec<usize>> {
        assert_eq!(bottom.points(), 2 * self.n, "bottom closure size");
        assert_eq!(top.points(), 2 * self.m, "top closure size");
        let mut arcs: Vec<(usize, usize)> = top
            .arcs()
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (2 * self.m - i + 1, 2 * self.m - j + 1);
                (a.min(b), a.max(b))
            })
            .collect();
        arcs.extend(
            bottom
                .arcs()
                .iter()
                .map(|&(i, j)| (2 * self.m + i, 2 * self.m + j)),
        );
        let closure = Matching::from_arcs(arcs).expect("closure matching is planar");
        glue_circles(&self.unbent, &closure)
    }
}

impl fmt::Display for FlatTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tangle[{}x{}]{}",
            self.top_points(),
            self.bottom_points(),
            self.unbent
        )
    }
}

impl fmt::Debug for FlatTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
