//! Lattice-path bijection for the spanning sets `B_{n,k}`.
//!
//! Reading a diagram left to right, each right endpoint of an *undotted*
//! arc contributes a down step and every other position a right step. The
//! result is a path from `(0,0)` to `(n+k, n-k)` that never falls below the
//! diagonal, and the correspondence is a bijection — which is how the rank
//! formula `C(2n, n+k) - C(2n, n+k+1)` is counted by hand.

use std::fmt;

use super::{Diagram, Matching};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Right,
    Down,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePath {
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Forward direction of the bijection.
    pub fn from_diagram(d: &Diagram) -> Result<Self, String> {
        if !d.is_basis_diagram() {
            return Err("lattice paths are defined for dots on outer arcs".into());
        }
        let m = d.matching();
        let steps = (1..=m.points())
            .map(|p| {
                let (l, r) = m.arc_of(p);
                if p == r && d.dots_on(l) == 0 {
                    Step::Down
                } else {
                    Step::Right
                }
            })
            .collect();
        Ok(LatticePath { steps })
    }

    /// Inverse direction: each down step closes an undotted arc with the
    /// nearest unmatched right step to its left; remaining right steps pair
    /// up consecutively as dotted arcs.
    pub fn to_diagram(&self) -> Result<Diagram, String> {
        let mut stack: Vec<usize> = Vec::new();
        let mut arcs = Vec::new();
        let mut dotted_left = Vec::new();
        for (idx, &s) in self.steps.iter().enumerate() {
            let pos = idx + 1;
            match s {
                Step::Right => stack.push(pos),
                Step::Down => {
                    let l = stack
                        .pop()
                        .ok_or("path dips below the diagonal")?;
                    arcs.push((l, pos));
                }
            }
        }
        if stack.len() % 2 != 0 {
            return Err("path has odd excess of right steps".into());
        }
        for pair in stack.chunks(2) {
            arcs.push((pair[0], pair[1]));
            dotted_left.push(pair[0]);
        }
        let mut d = Diagram::undotted(Matching::from_arcs(arcs)?);
        for l in dotted_left {
            d = d.with_dot(l);
        }
        if !d.is_basis_diagram() {
            return Err("path does not correspond to a dotted basis diagram".into());
        }
        Ok(d)
    }

    /// Endpoint of the path, as `(rights, downs)`.
    pub fn endpoint(&self) -> (usize, usize) {
        let r = self.steps.iter().filter(|s| **s == Step::Right).count();
        (r, self.steps.len() - r)
    }

    /// Never dips below the diagonal: every prefix has at least as many
    /// right steps as down steps.
    pub fn stays_above_diagonal(&self) -> bool {
        let mut bal = 0i64;
        for s in &self.steps {
            bal += match s {
                Step::Right => 1,
                Step::Down => -1,
            };
            if bal < 0 {
                return false;
            }
        }
        true
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        let steps = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                'R' | 'r' => Ok(Step::Right),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(format!("unknown step {c:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LatticePath { steps })
    }

    /// All monotone paths from `(0,0)` to `(n+k, n-k)` weakly above the
    /// diagonal.
    pub fn all(n: usize, k: usize) -> Vec<LatticePath> {
        let rights = n + k;
        let downs = n - k;
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            cur: &mut Vec<Step>,
            r_left: usize,
            d_left: usize,
            bal: usize,
            out: &mut Vec<LatticePath>,
        ) {
            if r_left == 0 && d_left == 0 {
                out.push(LatticePath { steps: cur.clone() });
                return;
            }
            if r_left > 0 {
                cur.push(Step::Right);
                rec(cur, r_left - 1, d_left, bal + 1, out);
                cur.pop();
            }
            if d_left > 0 && bal > 0 {
                cur.push(Step::Down);
                rec(cur, r_left, d_left - 1, bal - 1, out);
                cur.pop();
            }
        }
        rec(&mut cur, rights, downs, 0, &mut out);
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::Right { 'R' } else { 'D' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    #[test]
    fn smallest_cases() {
        let undotted = Diagram::undotted(Matching::from_arcs(vec![(1, 2)]).unwrap());
        assert_eq!(
            LatticePath::from_diagram(&undotted).unwrap().to_string(),
            "RD"
        );
        let dotted = undotted.with_dot(1);
        assert_eq!(
            LatticePath::from_diagram(&dotted).unwrap().to_string(),
            "RR"
        );
        assert_eq!(LatticePath::parse("RD").unwrap().to_diagram().unwrap(), undotted);
        assert_eq!(LatticePath::parse("RR").unwrap().to_diagram().unwrap(), dotted);
    }

    #[test]
    fn bijection_round_trip() {
        for n in 1..=4usize {
            for k in 0..=n {
                let basis = Diagram::basis(n, k);
                let mut seen = std::collections::BTreeSet::new();
                for d in &basis {
                    let p = LatticePath::from_diagram(d).unwrap();
                    assert_eq!(p.endpoint(), (n + k, n - k));
                    assert!(p.stays_above_diagonal());
                    assert_eq!(&p.to_diagram().unwrap(), d, "round trip for {d}");
                    seen.insert(p.to_string());
                }
                assert_eq!(seen.len(), basis.len(), "paths are distinct");
                // and every valid path arises
                assert_eq!(LatticePath::all(n, k).len(), basis.len());
            }
        }
    }

    #[test]
    fn path_census_matches_rank_formula() {
        for n in 1..=5usize {
            for k in 0..=n {
                assert_eq!(
                    BigInt::from(LatticePath::all(n, k).len()),
                    Diagram::rank(n, k),
                    "path count for n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn bad_paths_rejected() {
        assert!(LatticePath::parse("DR").unwrap().to_diagram().is_err());
        assert!(LatticePath::parse("RRD").unwrap().to_diagram().is_err());
        assert!(LatticePath::parse("RXD").is_err());
    }
}
