//! Edge-magic and super edge-magic labelings of graphs and digraphs.
//!
//! - [`graph`]: multigraph/digraph values and the named families.
//! - [`labeling`]: verification, extension from vertex labels, complements.
//! - [`intervals`]: the super edge-magic and magic intervals.
//! - [`search`]: exhaustive valence spectra.
//! - [`product`]: the `⊗_h` product and the labelings it induces.
//! - [`decomp`]: bipartite 2-decompositions and `S_{2n}` graphs.
//! - [`format`]: text file formats.
//! - [`repro`]: end-to-end worked examples.

pub mod decomp;
pub mod error;
pub mod format;
pub mod graph;
pub mod intervals;
pub mod iso;
pub mod labeling;
pub mod product;
pub mod repro;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Bipartition, Digraph, Graph};
pub use labeling::{TotalLabeling, VertexLabeling};
