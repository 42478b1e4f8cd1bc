//! Multivariate polynomials over QQ and F_p, Gröbner bases, ideals and submodules.

mod gb;
mod ideal;
mod module;
mod monomial;
mod poly;
mod prime;

pub use ideal::Ideal;
pub use module::{all_minors, determinant, subsets, ModuleGb};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{render_poly, DisplayPoly, Poly, PolyRing};
pub use prime::{PrimeCertificate, PrimeIdeal};
