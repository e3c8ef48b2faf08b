//! High-precision evaluation of theta-function constants tied to the septic
//! (degree 7) modular equation.
//!
//! The crate computes `φ(q) = Σ q^{n²}` at nomes such as `e^{-7π√7}` two
//! independent ways: by summing q-series directly, and by evaluating closed
//! forms built from radicals, `cos(kπ/7)` and class invariants. The
//! [`verify`] module pits the two against each other.
//!
//! ```
//! use septica::{closed_forms, precision::to_decimal, septic, theta::Nome, Context, Ratio};
//!
//! let ctx = Context::new(40)?;
//! let q = Nome::exp_neg_pi_sqrt(Ratio::new(1, 7)?, &ctx);
//! let s = septic::run_pipeline(&q, &ctx)?;
//! let thm = closed_forms::evaluate_closed_form("thm1-bracket", &ctx)?;
//! assert_eq!(to_decimal(&s.ratio, 30), to_decimal(&thm, 30));
//! # Ok::<(), septica::Error>(())
//! ```

pub mod closed_forms;
pub mod error;
pub mod invariants;
pub mod precision;
pub mod septic;
pub mod table;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
pub use precision::{Context, Ratio, Real};
