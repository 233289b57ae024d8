//! The span- and cospan-flavoured intercategory builders: duoidal
//! categories, Span and Cosp of a double category, the quintet construction
//! SC_phi with its invertibility theorem, the cylinder and quintet views of
//! a double category, and the conjoint embeddings.

pub mod cosp;
pub mod duoidal;
pub mod embed;
pub mod verity;
pub mod fixtures;
pub mod scphi;
pub mod theorem;
pub mod span;

pub use cosp::CospIntercat;
pub use duoidal::{duoidal_intercat, DuoidalCat, DuoidalIntercat, FinSetDuoidal, TableDuoidal};
pub use scphi::{sc_phi, CatArrow, NatArrow, ScPhi, ScQuintet};
pub use embed::{sm_embedding, span2_map_conjoint, spancosp_morphisms, ScF0, ScF1, ScG, SmF, SmG, Sp2Map};
pub use theorem::{sc_phi_theorem, ScProbes, ScTheoremReport};
pub use span::SpanIntercat;
pub use verity::{property_star, CylinderIntercat, QuintetIntercat, StarReport};
