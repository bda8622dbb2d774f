//! Exact tooling for color refinement and homomorphism counting on hypergraphs.
//!
//! The crate provides:
//!
//! * a small data model for hypergraphs (parallel edges are first-class),
//!   vertex-colored graphs, and directed graphs ([`hypergraph`]);
//! * color refinement on colored graphs and its hypergraph variant, plus the
//!   distinguishing test between two structures ([`refine`]);
//! * exact counting of homomorphisms, incidence homomorphisms, and their
//!   locally restricted variants ([`homcount`]);
//! * isomorph-free enumeration of small instance families ([`enumerate`]);
//! * directed-graph tools: tensor products, transitive tournaments, and
//!   homomorphism-based distinguishing ([`digraphs`]);
//! * batch verifiers that check the counting identities relating all of the
//!   above on exhaustively enumerated instances, in exact rational
//!   arithmetic ([`verify`]);
//! * a JSON instance format shared with the command-line frontend
//!   ([`instance`]).
//!
//! Everything is deterministic: enumeration orders, counting results, and
//! verifier reports are byte-stable across runs.
//!
//! ```
//! use hypercr::homcount::{count, CountKind};
//! use hypercr::refine::distinguishes_hypergraphs;
//! use hypercr::Hypergraph;
//!
//! let g = Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3]])?;
//! let h = Hypergraph::new(3, vec![vec![1, 2], vec![2, 3]])?;
//!
//! // Refinement tells the two apart in one round ...
//! let verdict = distinguishes_hypergraphs(&g, &h);
//! assert!(verdict.distinguished);
//! assert_eq!(verdict.round, Some(1));
//!
//! // ... and counting incidence homomorphisms from the single-edge
//! // hypergraph on two vertices witnesses the difference exactly.
//! let pattern = Hypergraph::single_edge(2)?;
//! let into_g = count(CountKind::inhom(), &pattern, &g)?;
//! let into_h = count(CountKind::inhom(), &pattern, &h)?;
//! assert_ne!(into_g, into_h);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod canon;
pub mod digraphs;
pub mod enumerate;
pub mod homcount;
pub mod hypergraph;
pub mod instance;
pub mod refine;
pub mod verify;

pub use hypergraph::{ColoredGraph, DegreeSequence, Digraph, Hypergraph, StructureError};
