//! Zero-sum partitions of finite Abelian groups and their applications.
//!
//! - [`group`]: arithmetic, enumeration and structure of `Z_{n1} x ... x Z_{nk}`.
//! - [`zsp`]: involution quadruples, triple bijections `g + phi(g) + psi(g) = 0`
//!   and partitions of a group into equal-size zero-sum blocks.
//! - [`kotzig`]: group and integer Kotzig arrays.
//! - [`graphs`]: lexicographic blow-ups and group distance magic labelings.
//! - [`oracle`]: exhaustive backtracking searches used as ground truth.
//! - [`cert`]: the line-oriented certificate format.
//! - [`cli`]: the `zsp` command line front end.

pub mod cert;
pub mod cli;
pub mod error;
pub mod graphs;
pub mod group;
pub mod kotzig;
pub mod oracle;
pub mod zsp;

pub use error::{Error, Result};
pub use group::{CosetDecomposition, GroupElement, GroupSpec, InvolutionSet};
