//! The saddle-by-saddle surgery engine.
//!
//! Ring multiplication and the bimodule actions all take the same shape: a
//! closed curve configuration carrying `{1, X}` labels on its circles, plus
//! a list of paired arcs (an arc and its mirror on the facing interface)
//! that are removed one at a time and replaced by two vertical segments.
//! Each replacement either merges two circles (apply the Frobenius
//! multiplication) or splits one circle in two (apply the comultiplication).
//! The engine tracks components explicitly after every saddle, so callers
//! only describe the edges and where the initial labels sit.

use std::collections::BTreeMap;

use crate::exactmath::{LinComb, Ring};

use super::Frobenius;

/// A labeling state: component representative vertex -> `true` for `X`.
pub(crate) type Labels = BTreeMap<usize, bool>;

/// Connected components of an edge list, with a canonical representative
/// (the smallest vertex under the caller's sort order) per component.
pub(crate) struct Components {
    rep_of_vertex: Vec<usize>,
}

impl Components {
    fn compute(nverts: usize, sort_key: &[usize], edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); nverts];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut comp = vec![usize::MAX; nverts];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for start in 0..nverts {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            groups.push(members);
        }
        let mut rep_of_vertex = vec![0usize; nverts];
        for members in &groups {
            let rep = *members
                .iter()
                .min_by_key(|&&v| (sort_key[v], v))
                .expect("components are nonempty");
            for &v in members {
                rep_of_vertex[v] = rep;
            }
        }
        Components { rep_of_vertex }
    }

    pub(crate) fn rep_of(&self, v: usize) -> usize {
        self.rep_of_vertex[v]
    }
}

/// One closed picture about to undergo a sequence of saddle moves.
pub(crate) struct Surgery {
    nverts: usize,
    sort_key: Vec<usize>,
    fixed: Vec<(usize, usize)>,
    /// `((t1, t2), (b1, b2))`: the upper arc, and the mirror arc whose
    /// endpoints face `t1` and `t2` respectively.
    pending: Vec<((usize, usize), (usize, usize))>,
}

impl Surgery {
    pub(crate) fn new(
        nverts: usize,
        sort_key: Vec<usize>,
        fixed: Vec<(usize, usize)>,
        pending: Vec<((usize, usize), (usize, usize))>,
    ) -> Self {
        assert_eq!(sort_key.len(), nverts);
        Surgery { nverts, sort_key, fixed, pending }
    }

    fn components_at(&self, step: usize) -> Components {
        let mut edges = self.fixed.clone();
        for &((t1, t2), (b1, b2)) in &self.pending[step..] {
            edges.push((t1, t2));
            edges.push((b1, b2));
        }
        Components::compute(self.nverts, &self.sort_key, &edges)
    }

    /// Components before any saddle is applied (for placing initial labels).
    pub(crate) fn initial_components(&self) -> Components {
        self.components_at(0)
    }

    /// Apply every saddle in order, transforming the labeled state.
    pub(crate) fn run<C: Ring>(
        mut self,
        init: LinComb<Labels, C>,
        frob: &Frobenius<C>,
    ) -> LinComb<Labels, C> {
        let mut state = init;
        for step in 0..self.pending.len() {
            let ((t1, t2), (b1, b2)) = self.pending[step];
            let before = self.components_at(step);
            let p = before.rep_of(t1);
            let q = before.rep_of(b1);
            self.fixed.push((t1, b1));
            self.fixed.push((t2, b2));
            let after = self.components_at(step + 1);
            let mut next: LinComb<Labels, C> = LinComb::new();
            for (labels, coeff) in state.terms() {
                if p != q {
                    // merge: m(x, y)
                    let x = labels[&p];
                    let y = labels[&q];
                    let mut base = labels.clone();
                    base.remove(&p);
                    base.remove(&q);
                    let r = after.rep_of(t1);
                    debug_assert_eq!(r, after.rep_of(b1));
                    for (label, c) in frob.merge(x, y) {
                        let mut l = base.clone();
                        l.insert(r, label);
                        next.add_term(l, Ring::mul(coeff, &c));
                    }
                } else {
                    // split: delta(x)
                    let x = labels[&p];
                    let mut base = labels.clone();
                    base.remove(&p);
                    let r1 = after.rep_of(t1);
                    let r2 = after.rep_of(t2);
                    debug_assert_ne!(r1, r2, "a self-saddle always splits");
                    for (l1, l2, c) in frob.split(x) {
                        let mut l = base.clone();
                        l.insert(r1, l1);
                        l.insert(r2, l2);
                        next.add_term(l, Ring::mul(coeff, &c));
                    }
                }
            }
            state = next;
        }
        state
    }
}
