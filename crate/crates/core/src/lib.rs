//! Exact computations in the Gelfand-Tsetlin sl3-modules `M_{mu1,mu2}`, their
//! duals and l-bar subquotients: actions in the u-, w- and eta-bases,
//! intertwiner solving on finite windows, generation certificates and formal
//! characters.
//!
//! Coefficients are exact throughout ([`Scalar`]): either rationals at a
//! specialized parameter point or rational functions in the symbols `mu1`,
//! `mu2`.

pub mod checks;
pub mod dual;
mod error;
pub mod exactalg;
pub mod explorer;
pub mod gtmodule;
pub mod hom;
pub mod json;
pub mod linsolve;
pub mod sl3;
pub mod subquot;
pub mod window;

pub use error::{Error, Result};
pub use exactalg::{Rational, Scalar};
pub use gtmodule::{Basis, Element, Index, Params, SectionElement};
pub use sl3::{Generator, GeneratorWord, LieElement, Weight};
pub use hom::{HomProblem, HomResult, HomSolution, ModuleDescriptor};
pub use subquot::{IndexSet, SubquotientModule};
pub use window::Window;
