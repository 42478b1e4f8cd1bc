//! Whether a functor built from `a` detects quasi-isomorphisms between complexes supported in `V(a)`.

use std::fmt;

use crate::complexes::{koszul_complex, ChainMap};
use crate::derived::{free_resolution, FpModule};
use crate::error::{Error, Result};
use crate::exactla::ScalarField;
use crate::grobner::{Ideal, PolyRing};
use crate::support::homology_annihilator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectionMode {
    /// `K(a) ⊗ f`
    Koszul,
    /// `R/a ⊗^L f`
    Quotient,
    /// `RHom(R/a, f)`
    RhomQuotient,
}

impl fmt::Display for DetectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DetectionMode::Koszul => "koszul",
            DetectionMode::Quotient => "quotient",
            DetectionMode::RhomQuotient => "rhom-quotient",
        })
    }
}

impl std::str::FromStr for DetectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "koszul" => Ok(DetectionMode::Koszul),
            "quotient" => Ok(DetectionMode::Quotient),
            "rhom-quotient" => Ok(DetectionMode::RhomQuotient),
            _ => Err(Error::Malformed(format!("unknown detection mode '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectionReport {
    pub mode: DetectionMode,
    pub map_qis: bool,
    pub functored_qis: bool,
    /// Source and target homology supported in `V(a)`.
    pub hypothesis: bool,
}

impl DetectionReport {
    pub fn agree(&self) -> bool {
        self.map_qis == self.functored_qis
    }

    /// Under the support hypothesis the verdicts must agree.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.agree()
    }

    /// Disagreement outside the hypothesis, which the theory allows.
    pub fn expected_counterexample(&self) -> bool {
        !self.hypothesis && !self.agree()
    }
}

pub fn detect_iso_via_functor<F: ScalarField>(
    f: &ChainMap<PolyRing<F>>,
    a: &Ideal<F>,
    mode: DetectionMode,
) -> Result<DetectionReport> {
    let ring = a.ring();
    if f.source().ring() != ring {
        return Err(Error::RingMismatch("chain map and ideal over different rings".into()));
    }
    let gens = a.reduced_gens();
    let functored = match mode {
        DetectionMode::Koszul => f.tensor_left(&koszul_complex(ring, &gens))?,
        DetectionMode::Quotient | DetectionMode::RhomQuotient => {
            let quotient = FpModule::cyclic(ring.clone(), gens).into();
            let bundle = free_resolution(&quotient, ring.nvars() + 1);
            if !bundle.complete {
                return Err(Error::NotCertifiable(format!("R/{a} has no finite free resolution within the search length")));
            }
            if mode == DetectionMode::Quotient {
                f.tensor_left(&bundle.resolution)?
            } else {
                f.hom_from(&bundle.resolution)?
            }
        }
    };
    let supported = |c| homology_annihilator(&crate::derived::DerivedInput::Complex(c)).radical_contains_ideal(a);
    Ok(DetectionReport {
        mode,
        map_qis: f.is_quasi_isomorphism(),
        functored_qis: functored.is_quasi_isomorphism(),
        hypothesis: supported(f.source().clone()) && supported(f.target().clone()),
    })
}
