//! Exact construction of the Terwilliger algebra of the hypercube `Q_D` and
//! verification that `A`, `A*` and the imaginary adjacency matrix `Aε` act on
//! every irreducible module as a Leonard triple.
//!
//! All arithmetic happens in the Gaussian rationals; nothing is approximated.

pub mod cube;
pub mod decomp;
pub mod error;
pub mod leonard;
pub mod linalg;
pub mod report;
pub mod scalar;

pub use cube::{build_context, CubeContext, Operator, SpectrumTable, DEFAULT_D_LIMIT};
pub use decomp::{decompose, multiplicity, Decomposition, IrreducibleModule};
pub use error::{Error, Result};
pub use leonard::{is_leonard_triple, module_report, phi_matrix, BasisKind, Verdict};
pub use linalg::{ExactMatrix, ExactVector};
pub use report::IdentityCheck;
pub use scalar::GaussRat;
