//! Sylow p-subgroups of G₂(q) and PSU₄(q) built from root subgroups and
//! their commutator relations, with the subgroup, automorphism and
//! enumeration machinery needed to check structural statements about them
//! exhaustively at small q.

pub mod autom;
pub mod chevalley;
pub mod error;
pub mod exec;
pub mod gf;
pub mod lemmas;
pub mod grptool;
pub mod radenum;
pub mod report;

pub use chevalley::{Family, GroupElement, GroupTable};
pub use error::{Error, Result};
pub use exec::Exec;
