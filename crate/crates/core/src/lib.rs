//! Exact computations in connected cofiltered bialgebras: coproduct
//! iteration, the coradical filtration, convolution, three antipode
//! algorithms, and executable checks of every coalgebra, bialgebra, and Hopf
//! axiom over a finite basis slice.

pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod freemod;
pub mod hopf;
pub mod instances;
pub mod report;

pub use coalgebra::Coalgebra;
pub use error::{Error, Result};
pub use freemod::{BasisKey, Element, Scalar, Tensor};
pub use hopf::{Algorithm, Bialgebra, EndoMap};
