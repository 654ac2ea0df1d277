pub mod check;
pub mod config;
pub mod demo;
pub mod domain;
pub mod error;
pub mod eval;
pub mod gen;
pub mod kernel;
pub mod oracle;
pub mod ordinal;
pub mod pair;
pub mod relation;
pub mod separation;
pub mod sexp;
pub mod tower;

pub use domain::{Atom, AtomDomain, DomainKind};
pub use error::{MagmaError, Result};
pub use kernel::{Element, Generators, Kind, Magma};
pub use oracle::{FiniteUniverse, OracleReport};
pub use ordinal::{Level, Ordinal};
pub use pair::{PairView, Seeds, Slot, UnionEqualityCase};
pub use relation::{Classification, Relation, WeakProduct};
pub use separation::{ClassDescriptor, Fact, Predicate, Verdict, Witness};
pub use tower::{CountGenFun, MagNat, TailRule, Tower, Variant};
