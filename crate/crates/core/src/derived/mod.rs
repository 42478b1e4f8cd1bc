//! Derived functors of finitely presented modules and bounded free complexes.

mod fpmodule;
mod functors;
mod presented;

pub use fpmodule::FpModule;
pub use functors::{
    derived_completion_fg, derived_hom, derived_tensor, ext, free_resolution, local_cohomology_fiber, tor,
    torsion_submodule, Augmentation, CompletionTagged, DerivedInput, ResolutionBundle, RESOLUTION_GUARD,
};

#[cfg(test)]
mod tests;
