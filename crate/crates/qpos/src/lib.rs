//! Quasipositivity bounds for knots and links.
//!
//! The crate computes two-sided bounds on the modulus of quasipositivity
//! `q(K)` of a knot: the largest framing `f` such that an annulus with core
//! `K` and boundary-linking `-f` bounds a quasipositive surface.
//!
//! Lower bounds come from explicit constructions: positive braid closures,
//! positive plats, and charged fence diagrams (square-bridge presentations
//! whose writhe and corner count certify a framing). Upper bounds come from
//! link-polynomial degree estimates: the `v`-order of the reduced HOMFLY
//! specialization `R`, the `a`-degree of the mod-2 Kauffman polynomial and
//! its `G^0`/`G^1` sections, and the order of the framed sublink polynomial
//! `{L, f}`.
//!
//! Modules are layered bottom-up:
//!
//! * [`laurent`] — sparse Laurent polynomials over `Z` and `Z/2`
//! * [`diagram`] — planar link diagrams as combinatorial maps, with skein
//!   surgery, cabling, and canonical codes
//! * [`braid`] — braid words, band representations, plats
//! * [`fence`] — fence diagrams and the constructions tying them to band
//!   representations and positive plats
//! * [`skein`] — memoized polynomial engines (HOMFLY, `R`, mod-2 Kauffman,
//!   framed polynomial)
//! * [`bounds`] — bound aggregation, knot families, seeded property corpora
//!
//! With the `parallel` feature (default) batch evaluations use rayon; the
//! same entry points fall back to sequential iteration when the feature is
//! disabled. Results are identical either way.

pub mod batch;
pub mod bounds;
pub mod braid;
pub mod diagram;
pub mod fence;
pub mod skein;
pub mod laurent;

pub use bounds::{
    family_generate, family_report, q_report, BoundEntry, BoundsError, FamilyOutput, FamilySpec,
    QBoundsInput, QBoundsReport,
};
pub use braid::{Band, BandRepresentation, BraidError, BraidWord, Plat, PlatHalf, PlatPlan};
pub use diagram::{CrossingCase, DiagramError, FramedDiagram, LinkDiagram};
pub use fence::{ChargedFence, Fence, FenceComponents, FenceError, Post, Wire};
pub use skein::{SkeinEngine, SkeinError};
pub use laurent::{Laurent1, Laurent2, LaurentError, Ring};
