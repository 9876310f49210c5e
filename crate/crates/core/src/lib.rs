//! Recognition of linear leaf powers and star NeS graphs, with exact
//! rational certificates.

pub mod cert;
pub mod chordal;
pub mod dot;
pub mod error;
pub mod graph;
pub mod interval;
pub mod io;
pub mod linear;
pub mod nes;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod star;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use partition::Partition;
