//! Crossingless matchings on a line of `2n` points, with dots.
//!
//! A [`Matching`] is a planar perfect matching of the points `1..=2n` drawn
//! as arcs below a horizontal line; a [`Diagram`] decorates its arcs with
//! dots. The distinguished spanning sets `B_{n,k}` (exactly `k` dots, each
//! on an outer arc, at most one per arc) are enumerated here together with
//! the combinatorial bookkeeping the rewriting calculus needs: containment
//! queries, 180-degree rotation, gluing two matchings into circles, tuple
//! notation, and the lattice-path bijection.

mod paths;
mod tangle;
mod tuple;

pub use paths::LatticePath;
pub use tangle::FlatTangle;
pub use tuple::{Block, TupleNotation};

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use serde_json::{json, Value};

use crate::exactmath::binomial;

/// A crossingless perfect matching of the points `1..=2n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    n: usize,
    /// `(left, right)` pairs, sorted by left endpoint.
    arcs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_arcs(arcs: Vec<(usize, usize)>) -> Result<Self, String> {
        let n = arcs.len();
        let mut seen = vec![false; 2 * n + 1];
        for &(l, r) in &arcs {
            if l >= r {
                return Err(format!("arc ({l}, {r}) must have left < right"));
            }
            if r > 2 * n {
                return Err(format!("endpoint {r} out of range for {n} arcs"));
            }
            for p in [l, r] {
                if seen[p] {
                    return Err(format!("endpoint {p} used twice"));
                }
                seen[p] = true;
            }
        }
        let mut arcs = arcs;
        arcs.sort_unstable();
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                let (a, b) = arcs[i];
                let (c, d) = arcs[j];
                if a < c && c < b && b < d {
                    return Err(format!("arcs ({a}, {b}) and ({c}, {d}) cross"));
                }
            }
        }
        Ok(Matching { n, arcs })
    }

    /// The unique matching on zero points.
    pub fn empty() -> Self {
        Matching { n: 0, arcs: vec![] }
    }

    /// Number of arcs.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of endpoints, `2n`.
    pub fn points(&self) -> usize {
        2 * self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn partner(&self, p: usize) -> usize {
        for &(l, r) in &self.arcs {
            if l == p {
                return r;
            }
            if r == p {
                return l;
            }
        }
        panic!("point {p} not in matching");
    }

    pub fn arc_of(&self, p: usize) -> (usize, usize) {
        for &(l, r) in &self.arcs {
            if l == p || r == p {
                return (l, r);
            }
        }
        panic!("point {p} not in matching");
    }

    pub fn arc_with_left(&self, l: usize) -> Option<(usize, usize)> {
        self.arcs.iter().copied().find(|&(a, _)| a == l)
    }

    /// Arcs strictly containing `(l, r)`.
    pub fn containers(&self, l: usize, r: usize) -> Vec<(usize, usize)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(a, d)| a < l && r < d)
            .collect()
    }

    /// An arc is outer when no other arc strictly contains it.
    pub fn is_outer(&self, l: usize, r: usize) -> bool {
        self.containers(l, r).is_empty()
    }

    pub fn outer_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(l, r)| self.is_outer(l, r))
            .collect()
    }

    /// All crossingless matchings of `2n` points (Catalan many).
    pub fn all(n: usize) -> Vec<Matching> {
        fn rec(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if points.is_empty() {
                return vec![vec![]];
            }
            let first = points[0];
            let mut out = Vec::new();
            for idx in (1..points.len()).step_by(2) {
                let inner = rec(&points[1..idx]);
                let outer = rec(&points[idx + 1..]);
                for ins in &inner {
                    for outs in &outer {
                        let mut arcs = vec![(first, points[idx])];
                        arcs.extend_from_slice(ins);
                        arcs.extend_from_slice(outs);
                        out.push(arcs);
                    }
                }
            }
            out
        }
        let pts: Vec<usize> = (1..=2 * n).collect();
        rec(&pts)
            .into_iter()
            .map(|mut arcs| {
                arcs.sort_unstable();
                Matching { n, arcs }
            })
            .collect()
    }

    /// Rotate the line by 180 degrees: point `p` goes to `2n + 1 - p`.
    pub fn rotate180(&self) -> Matching {
        let last = 2 * self.n + 1;
        let mut arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(l, r)| (last - r, last - l))
            .collect();
        arcs.sort_unstable();
        Matching { n: self.n, arcs }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (l, r)) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({l} {r})")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Glue `bottom` (arcs below the line) to `top` (arcs above the line) and
/// trace the resulting circles. Circles are returned as sorted point sets,
/// ordered by their leftmost point.
pub fn glue_circles(bottom: &Matching, top: &Matching) -> Vec<Vec<usize>> {
    assert_eq!(bottom.points(), top.points(), "matchings must share endpoints");
    let n2 = bottom.points();
    let mut visited = vec![false; n2 + 1];
    let mut circles = Vec::new();
    for start in 1..=n2 {
        if visited[start] {
            continue;
        }
        let mut circle = Vec::new();
        let mut p = start;
        // alternate bottom arc, top arc until the walk closes up
        loop {
            visited[p] = true;
            circle.push(p);
            let q = bottom.partner(p);
            visited[q] = true;
            circle.push(q);
            p = top.partner(q);
            if p == start {
                break;
            }
        }
        circle.sort_unstable();
        circles.push(circle);
    }
    circles.sort_by_key(|c| c[0]);
    circles
}

/// A matching with dotted arcs; dot multiplicities are keyed by the arc's
/// left endpoint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    matching: Matching,
    dots: BTreeMap<usize, u32>,
}

impl Diagram {
    pub fn undotted(matching: Matching) -> Self {
        Diagram {
            matching,
            dots: BTreeMap::new(),
        }
    }

    pub fn new(matching: Matching, dots: BTreeMap<usize, u32>) -> Result<Self, String> {
        for (&l, &m) in &dots {
            if matching.arc_with_left(l).is_none() {
                return Err(format!("dot key {l} is not the left endpoint of an arc"));
            }
            if m == 0 {
                return Err(format!("dot multiplicity 0 at {l} should be omitted"));
            }
        }
        Ok(Diagram { matching, dots })
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn dots(&self) -> &BTreeMap<usize, u32> {
        &self.dots
    }

    pub fn dots_on(&self, left: usize) -> u32 {
        self.dots.get(&left).copied().unwrap_or(0)
    }

    pub fn total_dots(&self) -> u32 {
        self.dots.values().sum()
    }

    /// Add `count` dots to the arc with the given left endpoint.
    pub fn with_dots(&self, left: usize, count: u32) -> Self {
        assert!(
            self.matching.arc_with_left(left).is_some(),
            "no arc with left endpoint {left}"
        );
        let mut d = self.clone();
        *d.dots.entry(left).or_insert(0) += count;
        if d.dots[&left] == 0 {
            d.dots.remove(&left);
        }
        d
    }

    pub fn with_dot(&self, left: usize) -> Self {
        self.with_dots(left, 1)
    }

    /// Replace the dot count on one arc.
    pub fn set_dots(&self, left: usize, count: u32) -> Self {
        let mut d = self.clone();
        if count == 0 {
            d.dots.remove(&left);
        } else {
            assert!(self.matching.arc_with_left(left).is_some());
            d.dots.insert(left, count);
        }
        d
    }

    /// Member of `B_{n,k}`: each dot multiplicity 1, every dotted arc outer.
    pub fn is_basis_diagram(&self) -> bool {
        self.dots.iter().all(|(&l, &m)| {
            m == 1 && {
                let (a, b) = self.matching.arc_of(l);
                self.matching.is_outer(a, b)
            }
        })
    }

    /// The spanning set `B_{n,k}`: all matchings of `2n` points with `k`
    /// dots on distinct outer arcs.
    pub fn basis(n: usize, k: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        for m in Matching::all(n) {
            let outer = m.outer_arcs();
            if outer.len() < k {
                continue;
            }
            for subset in k_subsets(outer.len(), k) {
                let dots: BTreeMap<usize, u32> =
                    subset.iter().map(|&i| (outer[i].0, 1)).collect();
                out.push(Diagram {
                    matching: m.clone(),
                    dots,
                });
            }
        }
        out.sort_unstable();
        out
    }

    /// All diagrams with `k` dots on distinct arcs (outer or not) — the
    /// ambient spanning set the relations act on.
    pub fn all_dotted(n: usize, k: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        for m in Matching::all(n) {
            if m.n() < k {
                continue;
            }
            let arcs = m.arcs().to_vec();
            for subset in k_subsets(arcs.len(), k) {
                let dots: BTreeMap<usize, u32> =
                    subset.iter().map(|&i| (arcs[i].0, 1)).collect();
                out.push(Diagram {
                    matching: m.clone(),
                    dots,
                });
            }
        }
        out.sort_unstable();
        out
    }

    /// `|B_{n,k}| = C(2n, n+k) - C(2n, n+k+1)`.
    pub fn rank(n: usize, k: usize) -> BigInt {
        binomial(2 * n, n + k) - binomial(2 * n, n + k + 1)
    }

    /// Sum over dots (with multiplicity) of the number of arcs strictly
    /// containing the dotted arc.
    pub fn containment_statistic(&self) -> usize {
        self.dots
            .iter()
            .map(|(&l, &m)| {
                let (a, b) = self.matching.arc_of(l);
                self.matching.containers(a, b).len() * m as usize
            })
            .sum()
    }

    pub fn rotate180(&self) -> Diagram {
        let m = self.matching.rotate180();
        let last = 2 * self.matching.n() + 1;
        let dots = self
            .dots
            .iter()
            .map(|(&l, &mult)| {
                let (_, r) = self.matching.arc_of(l);
                (last - r, mult)
            })
            .collect();
        Diagram { matching: m, dots }
    }

    pub fn to_json(&self) -> Value {
        let arcs: Vec<Value> = self
            .matching
            .arcs
            .iter()
            .map(|&(l, r)| json!([l, r]))
            .collect();
        let dots: serde_json::Map<String, Value> = self
            .dots
            .iter()
            .map(|(&l, &m)| (l.to_string(), json!(m)))
            .collect();
        json!({ "n": self.matching.n, "arcs": arcs, "dots": dots })
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let n = v["n"].as_u64().ok_or("missing field 'n'")? as usize;
        let arcs_json = v["arcs"].as_array().ok_or("missing field 'arcs'")?;
        let mut arcs = Vec::new();
        for a in arcs_json {
            let pair = a.as_array().filter(|p| p.len() == 2).ok_or("bad arc")?;
            let l = pair[0].as_u64().ok_or("bad arc endpoint")? as usize;
            let r = pair[1].as_u64().ok_or("bad arc endpoint")? as usize;
            arcs.push((l, r));
        }
        let matching = Matching::from_arcs(arcs)?;
        if matching.n() != n {
            return Err(format!("'n' is {n} but {} arcs given", matching.n()));
        }
        let mut dots = BTreeMap::new();
        if let Some(obj) = v.get("dots").and_then(|d| d.as_object()) {
            for (key, val) in obj {
                let l: usize = key.parse().map_err(|_| format!("bad dot key {key:?}"))?;
                let m = val.as_u64().ok_or("bad dot multiplicity")? as u32;
                if m > 0 {
                    dots.insert(l, m);
                }
            }
        }
        Diagram::new(matching, dots)
    }

    /// Render as e.g. `((1 4)* (2 3))`; one `*` per dot.
    pub fn to_ascii(&self) -> String {
        let mut s = String::from("(");
        for (i, &(l, r)) in self.matching.arcs.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&format!("({l} {r})"));
            for _ in 0..self.dots_on(l) {
                s.push('*');
            }
        }
        s.push(')');
        s
    }

    pub fn from_ascii(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or("diagram must be wrapped in parentheses")?;
        let mut arcs = Vec::new();
        let mut dots = BTreeMap::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let open = rest.find('(').ok_or("expected '('")?;
            let close = rest[open..].find(')').ok_or("unbalanced '('")? + open;
            let body = &rest[open + 1..close];
            let nums: Vec<&str> = body.split_whitespace().collect();
            if nums.len() != 2 {
                return Err(format!("arc {body:?} must have two endpoints"));
            }
            let l: usize = nums[0].parse().map_err(|_| "bad endpoint")?;
            let r: usize = nums[1].parse().map_err(|_| "bad endpoint")?;
            arcs.push((l, r));
            rest = &rest[close + 1..];
            let stars = rest.len() - rest.trim_start_matches('*').len();
            if stars > 0 {
                dots.insert(l, stars as u32);
                rest = &rest[stars..];
            }
            rest = rest.trim_start();
        }
        Diagram::new(Matching::from_arcs(arcs)?, dots)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}

/// All k-element subsets of `0..len`, each sorted ascending.
pub(crate) fn k_subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..len).combinations(k).collect()
}

/// Plain union–find over `0..n`, used wherever strands are glued:
/// crossing smoothings, surgery on circles, projector attachment.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}
