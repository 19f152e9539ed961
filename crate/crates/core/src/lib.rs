//! Exact computer algebra for Alexander polynomials of torus knots and their
//! Chebyshev and q-number representations.

pub mod alexander;
pub mod chebyshev;
pub mod error;
pub mod expansions;
pub mod poly;
pub mod qcalc;
pub mod render;
pub mod verify;

pub use alexander::{
    alexander_laurent, alexander_n2, alexander_n3, alexander_standard, degree_m, DegreeM,
    TorusKnotId,
};
pub use chebyshev::{cheb_t, cheb_v, chebyshev, Basis, ChebKind, Expansion};
pub use error::{Error, Result};
pub use expansions::{
    check_prop1, compute_form, decompose_n3, functional_dependence_eval, n2_to_t, n2_to_v, n3_to_t,
    n3_to_v, q_expansion, telescope_n3, FormulaId,
};
pub use poly::{HalfExp, LaurentPoly, Poly, RationalLaurent};
pub use qcalc::{q_bracket_ratio, q_number, QBase};
pub use render::{laurent_latex, laurent_text, parse_laurent, DecodeError, OutputFormat};
pub use verify::{oracle_division, run_identity_suite, trig_spot_check, Failure, SweepReport};
