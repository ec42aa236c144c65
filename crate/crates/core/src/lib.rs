//! Commutative algebra kernel for measuring how lengths of Ext and Tor grow
//! along powers of an ideal.
//!
//! Rings are graded quotients of polynomial rings over F_p or Q. Modules are
//! subquotients of free modules, handled through Gröbner bases for modules.
//! On top of that sit free resolutions, Ext/Tor as explicit subquotients,
//! H⁰_m by saturation, analytic spread through the fiber cone, and an exact
//! quasi-polynomial fitter for the resulting length sequences.
//!
//! ```
//! use hgl_core::homology::ext;
//! use hgl_core::ideal::IdealPresentation;
//! use hgl_core::module::{Length, SubmodulePresentation};
//! use hgl_core::monomial::OrderKind;
//! use hgl_core::ring::RingPresentation;
//! use hgl_core::scalar::{Field, DEFAULT_PRIME};
//!
//! let s = RingPresentation::polynomial_ring(&["U", "V", "W"], Field::Prime(DEFAULT_PRIME), None, OrderKind::Grevlex).unwrap();
//! let r = s.quotient(vec![s.parse_poly("V^2 - U*W").unwrap()]).unwrap();
//! let i = IdealPresentation::new(&r, vec![r.var(0), r.var(1)]);
//! let e = ext(2, &i.power(4).quotient_module(), &SubmodulePresentation::free(&r, vec![0])).unwrap();
//! assert_eq!(e.length().unwrap(), Length::Finite(4));
//! ```

pub mod error;
pub mod groebner;
pub mod growth;
pub mod homology;
pub mod ideal;
pub mod module;
pub mod monomial;
pub mod par;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod spread;

pub use error::{AlgebraError, Result};
pub use growth::{FitOptions, FitOutcome, GrowthReport, LengthSequence};
pub use homology::{FunctorKind, FunctorSpec, ModuleExpr};
pub use ideal::IdealPresentation;
pub use module::{Length, SubmodulePresentation};
pub use par::Execution;
pub use ring::{Ring, RingPresentation};
