//! Quotient skein modules over tangle boundaries.

/// Placeholder.
#[derive(Debug)]
pub struct QuotientSkeinReport;

/// Placeholder.
#[derive(Debug)]
pub struct HomRingReport;

/// Placeholder.
pub fn quotient_skein(_m: usize, _n: usize) -> QuotientSkeinReport {
    todo!()
}

/// Placeholder.
pub fn hom_ring_checks() -> HomRingReport {
    todo!()
}
