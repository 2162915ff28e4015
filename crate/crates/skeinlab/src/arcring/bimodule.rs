//! Tangle bimodules over the arc rings.

/// Placeholder.
#[derive(Debug)]
pub struct TangleBimodule;

/// Placeholder.
pub fn bimodule_hom_dim() -> usize {
    todo!()
}
