//! Tuple notation for dotted diagrams.
//!
//! Reading the `2n` endpoints left to right and writing `D` for a left
//! endpoint and `U` for a right endpoint produces an alternating sequence
//! of runs `D^x1 U^y1 D^x2 U^y2 ...`. A diagram with dots on outer arcs is
//! determined by these run lengths plus one bit per run: the arc opened at
//! the *first* position of a down run (equivalently closed at the *last*
//! position of an up run) is the only arc of that run that can be outer,
//! and the bit records whether it is dotted. Blocks print as
//! `(x1^e,y1^e;...)`.
//!
//! The statistic `r` computed here counts the projectors in the recursive
//! dual construction; it drives the recursion's termination argument.

use std::fmt;

use super::{Diagram, Matching};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Block {
    pub x: usize,
    pub eps_x: bool,
    pub y: usize,
    pub eps_y: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TupleNotation {
    pub blocks: Vec<Block>,
}

impl TupleNotation {
    /// Encode a diagram whose dots sit on outer arcs (multiplicity one).
    pub fn encode(d: &Diagram) -> Result<Self, String> {
        if !d.is_basis_diagram() {
            return Err("tuple notation requires single dots on outer arcs".into());
        }
        let m = d.matching();
        if m.n() == 0 {
            return Ok(TupleNotation { blocks: vec![] });
        }
        let is_down: Vec<bool> = (1..=m.points())
            .map(|p| m.arc_of(p).0 == p)
            .collect();
        // split into alternating runs; the word starts with D and ends with U
        let mut runs: Vec<(bool, usize, usize)> = Vec::new(); // (down?, first pos, len)
        for (idx, &down) in is_down.iter().enumerate() {
            let pos = idx + 1;
            match runs.last_mut() {
                Some((d0, _, len)) if *d0 == down => *len += 1,
                _ => runs.push((down, pos, 1)),
            }
        }
        debug_assert!(runs.len() % 2 == 0 && runs[0].0);
        let mut blocks = Vec::new();
        for pair in runs.chunks(2) {
            let (_, xfirst, xlen) = pair[0];
            let (_, yfirst, ylen) = pair[1];
            let ylast = yfirst + ylen - 1;
            let eps_x = d.dots_on(xfirst) > 0;
            let eps_y = d.dots_on(m.arc_of(ylast).0) > 0;
            blocks.push(Block {
                x: xlen,
                eps_x,
                y: ylen,
                eps_y,
            });
        }
        Ok(TupleNotation { blocks })
    }

    /// Decode to a diagram, validating that the result re-encodes to the
    /// same tuple (this rejects dots on non-outer arcs and inconsistent
    /// markings).
    pub fn decode(&self) -> Result<Diagram, String> {
        let mut word: Vec<bool> = Vec::new(); // true = D
        for b in &self.blocks {
            if b.x == 0 || b.y == 0 {
                return Err("run lengths must be positive".into());
            }
            word.extend(std::iter::repeat(true).take(b.x));
            word.extend(std::iter::repeat(false).take(b.y));
        }
        let mut stack = Vec::new();
        let mut arcs = Vec::new();
        for (idx, &down) in word.iter().enumerate() {
            let pos = idx + 1;
            if down {
                stack.push(pos);
            } else {
                let l = stack
                    .pop()
                    .ok_or("unbalanced word: an up run closes nothing")?;
                arcs.push((l, pos));
            }
        }
        debug_assert!(stack.is_empty());
        let matching = Matching::from_arcs(arcs)?;
        let mut d = Diagram::undotted(matching);
        let mut pos = 0usize;
        for b in &self.blocks {
            let xfirst = pos + 1;
            pos += b.x;
            let ylast = pos + b.y;
            pos += b.y;
            if b.eps_x {
                let (l, _) = d.matching().arc_of(xfirst);
                if d.dots_on(l) == 0 {
                    d = d.with_dot(l);
                }
            }
            if b.eps_y {
                let (l, _) = d.matching().arc_of(ylast);
                if d.dots_on(l) == 0 {
                    d = d.with_dot(l);
                }
            }
        }
        // reject tuples that mark non-outer arcs or whose markings disagree
        if !d.is_basis_diagram() {
            return Err("tuple marks a non-outer arc".into());
        }
        let back = TupleNotation::encode(&d)?;
        if back != *self {
            return Err("inconsistent dot markings in tuple".into());
        }
        Ok(d)
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// The projector count `r = k + 1 - gamma - delta` of the recursive
    /// dual construction.
    pub fn r(&self) -> i64 {
        let k = self.blocks.len();
        assert!(k >= 1, "r is defined for nonempty tuples");
        let gamma = self
            .blocks
            .iter()
            .filter(|b| b.x == 1 && b.y == 1 && b.eps_x && b.eps_y)
            .count() as i64;
        let first = self.blocks[0].eps_x;
        let last = self.blocks[k - 1].eps_y;
        let delta = if first && last {
            0
        } else if k == 1 || (first != last) {
            1
        } else {
            // both ends undotted, k > 1: 2 when some proper prefix balances
            let mut sx = 0usize;
            let mut sy = 0usize;
            let mut balanced = false;
            for b in &self.blocks[..k - 1] {
                sx += b.x;
                sy += b.y;
                if sx == sy {
                    balanced = true;
                    break;
                }
            }
            if balanced {
                2
            } else {
                1
            }
        };
        k as i64 + 1 - gamma - delta
    }

    /// Parse `(2^0,1^0;1^1,1^1)` style strings.
    pub fn parse(s: &str) -> Result<Self, String> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or("tuple must be wrapped in parentheses")?;
        let mut blocks = Vec::new();
        for part in inner.split(';') {
            let halves: Vec<&str> = part.split(',').collect();
            if halves.len() != 2 {
                return Err(format!("block {part:?} must be 'x^e,y^e'"));
            }
            let parse_half = |h: &str| -> Result<(usize, bool), String> {
                let (num, eps) = h
                    .trim()
                    .split_once('^')
                    .ok_or_else(|| format!("missing '^' in {h:?}"))?;
                let n: usize = num.parse().map_err(|_| format!("bad run length {num:?}"))?;
                let e = match eps {
                    "0" => false,
                    "1" => true,
                    _ => return Err(format!("marking must be 0 or 1, got {eps:?}")),
                };
                Ok((n, e))
            };
            let (x, eps_x) = parse_half(halves[0])?;
            let (y, eps_y) = parse_half(halves[1])?;
            blocks.push(Block { x, eps_x, y, eps_y });
        }
        Ok(TupleNotation { blocks })
    }
}

impl fmt::Display for TupleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(
                f,
                "{}^{},{}^{}",
                b.x, b.eps_x as u8, b.y, b.eps_y as u8
            )?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let t = TupleNotation::parse("(2^0,1^0;1^0,2^0;1^1,1^1;2^1,2^1)").unwrap();
        let d = t.decode().unwrap();
        let expected = Diagram::undotted(
            Matching::from_arcs(vec![(1, 6), (2, 3), (4, 5), (7, 8), (9, 12), (10, 11)])
                .unwrap(),
        )
        .with_dot(7)
        .with_dot(9);
        assert_eq!(d, expected);
        assert_eq!(t.r(), 3);
        assert_eq!(t.to_string(), "(2^0,1^0;1^0,2^0;1^1,1^1;2^1,2^1)");
    }

    #[test]
    fn encode_decode_round_trip() {
        for n in 1..=4usize {
            for k in 0..=n {
                for d in Diagram::basis(n, k) {
                    let t = TupleNotation::encode(&d).unwrap();
                    assert_eq!(t.decode().unwrap(), d, "round trip for {d}");
                    assert_eq!(
                        t.blocks.iter().map(|b| b.x + b.y).sum::<usize>(),
                        2 * n
                    );
                }
            }
        }
    }

    #[test]
    fn r_values() {
        let r_of = |s: &str| TupleNotation::parse(s).unwrap().r();
        // fully dotted single block: delta = 0, gamma = 1
        assert_eq!(r_of("(1^1,1^1)"), 1);
        // undotted single block
        assert_eq!(r_of("(1^0,1^0)"), 1);
        assert_eq!(r_of("(3^0,3^0)"), 1);
        // two blocks, balanced prefix: delta = 2
        assert_eq!(r_of("(1^0,1^0;1^0,1^0)"), 1);
        // two blocks, no balanced prefix: delta = 1
        assert_eq!(r_of("(2^0,1^0;1^0,2^0)"), 2);
        // one end dotted (dot on (1,2)): delta = 1, gamma = 1
        assert_eq!(r_of("(1^1,1^1;1^0,1^0)"), 1);
        // both ends dotted by the single arc (1,6): delta = 0
        assert_eq!(r_of("(2^1,1^0;1^0,2^1)"), 3);
        // every arc dotted: gamma = 2, delta = 0
        assert_eq!(r_of("(1^1,1^1;1^1,1^1)"), 1);
    }

    #[test]
    fn invalid_tuples_rejected() {
        // marks the arc (4,5), which is nested inside (1,6)
        let t = TupleNotation::parse("(2^0,1^0;1^1,2^0)").unwrap();
        assert!(t.decode().is_err());
        // unbalanced word: more ups than downs at some prefix
        let t = TupleNotation::parse("(1^0,2^0;2^0,1^0)").unwrap();
        assert!(t.decode().is_err());
        // zero run length
        let t = TupleNotation::parse("(0^0,1^0)").unwrap();
        assert!(t.decode().is_err());
    }

    #[test]
    fn dotted_arcs_sit_at_run_boundaries() {
        // every basis diagram encodes, i.e. each dotted outer arc opens a
        // down run and closes an up run
        for d in Diagram::basis(4, 2) {
            assert!(TupleNotation::encode(&d).is_ok());
        }
    }
}
