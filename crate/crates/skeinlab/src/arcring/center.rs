//! Centers of the arc rings.

/// Placeholder.
#[derive(Debug)]
pub struct CenterReport;

/// Placeholder.
#[derive(Debug)]
pub struct CenterTReport;

/// Placeholder.
pub fn center_classical(_n: usize) -> CenterReport {
    todo!()
}

/// Placeholder.
pub fn center_t(_n: usize) -> CenterTReport {
    todo!()
}
