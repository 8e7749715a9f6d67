//! Exact representation-theoretic multiplicity computations around the orbit
//! closure of the power-sum polynomial: partitions and tableaux, Kostka /
//! Littlewood-Richardson / plethysm coefficients, the orbit-multiplicity
//! formula and its separation certificates, tableau lifting with an
//! exhaustive verifier, highest-weight-function evaluation via determinant
//! products, and the Alon-Tarsi Latin-square check.

pub mod coeff;
pub mod error;
pub mod latin;
pub mod lifting;
pub mod orbit;
pub mod partition;
pub mod rep;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{partitions_of, Content, Partition};
pub use tableau::{Entry, Tableau};
