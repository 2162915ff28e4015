//! Zeroth Hochschild homology of the arc rings.

/// Placeholder.
#[derive(Debug)]
pub struct Hh0Classical;

/// Placeholder.
#[derive(Debug)]
pub struct Hh0Equivariant;

/// Placeholder.
pub fn hh0_classical(_n: usize) -> Hh0Classical {
    todo!()
}

/// Placeholder.
pub fn hh0_equivariant(_n: usize) -> Hh0Equivariant {
    todo!()
}

/// Placeholder.
pub fn phi_map() {
    todo!()
}
