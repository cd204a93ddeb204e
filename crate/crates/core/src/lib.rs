//! Exact multigraded characters of generalized Kirillov-Reshetikhin modules
//! for the classical simple Lie algebras.

pub mod character;
pub mod krchar;
pub mod lp;
pub mod memo;
pub mod output;
pub mod poset;
pub mod repchar;
pub mod rootsys;

pub use character::{IsoChar, WeightChar};
pub use repchar::{Factor, ModuleSpec, PowerKind, RepEngine, RepError};
pub use rootsys::{Family, LieType, RootSystem, Weight};
pub use krchar::{multiplicity_ell_profile, specialize_degree, GradedChar, KrEngine, KrError, MonomialMatrix, Outcome, PsiMode};
pub use poset::{GammaSet, LambdaPoint, MultiDegree, PsiSet};
