//! The named algebras: painted trees, weighted trees, composition trees,
//! simplex faces, and every connection on the eight composites that admit
//! one.
//!
//! Connection names read `top-base.side`: `ssym-ysym.fr` has permutations
//! grafted on a tree and acts through the base.

mod composition;
mod deltasym;
pub mod painted;
mod weighted;

use crate::basealg::{CSym, CombInclusion, Identity, Kappa, KappaTau, SSym, Tau, YSym};
use crate::operad::{BaseConnection, TopConnection};

pub use composition::CompositionTree;
pub use deltasym::{alpha, alpha_inverse, DeltaSym, SimplexFace};
pub use painted::PaintedTree;
pub use weighted::WeightedTree;

/// Painted trees with the connection through the painted part.
pub type PSymRight = BaseConnection<YSym, YSym, Identity>;
/// Painted trees with the connection through the unpainted forest.
pub type PSymLeft = TopConnection<YSym, YSym, Identity>;
/// Weighted trees, combs on trees, mapped to combs.
pub type CKSymLeft = TopConnection<YSym, CSym, Kappa>;
/// Weighted trees acting through the tree.
pub type CKSymRight = BaseConnection<YSym, CSym, CombInclusion>;
/// Composition trees, `f_l`.
pub type CCSymLeft = TopConnection<CSym, CSym, Identity>;
/// Composition trees, `f_r`.
pub type CCSymRight = BaseConnection<CSym, CSym, Identity>;
pub type SSymOverYSym = BaseConnection<YSym, SSym, Tau>;
pub type SSymOverCSym = BaseConnection<CSym, SSym, KappaTau>;
pub type YSymOverCSymRight = BaseConnection<CSym, YSym, Kappa>;
pub type YSymOverSSym = TopConnection<SSym, YSym, Tau>;
pub type YSymOverCSymLeft = TopConnection<CSym, YSym, CombInclusion>;
pub type CSymOverSSym = TopConnection<SSym, CSym, KappaTau>;

pub fn psym_fr() -> PSymRight {
    BaseConnection::new(YSym, YSym, Identity, "ysym-ysym.fr")
}

pub fn psym_fl() -> PSymLeft {
    TopConnection::new(YSym, YSym, Identity, "ysym-ysym.fl")
}

pub fn cksym_fl() -> CKSymLeft {
    TopConnection::new(YSym, CSym, Kappa, "csym-ysym.fl")
}

pub fn cksym_fr() -> CKSymRight {
    BaseConnection::new(YSym, CSym, CombInclusion, "csym-ysym.fr")
}

pub fn ccsym_fl() -> CCSymLeft {
    TopConnection::new(CSym, CSym, Identity, "csym-csym.fl")
}

pub fn ccsym_fr() -> CCSymRight {
    BaseConnection::new(CSym, CSym, Identity, "csym-csym.fr")
}

pub fn ssym_ysym_fr() -> SSymOverYSym {
    BaseConnection::new(YSym, SSym, Tau, "ssym-ysym.fr")
}

pub fn ssym_csym_fr() -> SSymOverCSym {
    BaseConnection::new(CSym, SSym, KappaTau, "ssym-csym.fr")
}

pub fn ysym_csym_fr() -> YSymOverCSymRight {
    BaseConnection::new(CSym, YSym, Kappa, "ysym-csym.fr")
}

pub fn ysym_ssym_fl() -> YSymOverSSym {
    TopConnection::new(SSym, YSym, Tau, "ysym-ssym.fl")
}

pub fn ysym_csym_fl() -> YSymOverCSymLeft {
    TopConnection::new(CSym, YSym, CombInclusion, "ysym-csym.fl")
}

pub fn csym_ssym_fl() -> CSymOverSSym {
    TopConnection::new(SSym, CSym, KappaTau, "csym-ssym.fl")
}
