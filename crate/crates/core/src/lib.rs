//! Numerical engine for discretized path integrals realized as traces of a
//! spacetime quantum-action operator.
//!
//! The library is organized around a single-slice Hilbert space ([`slice`])
//! and its `N`-fold tensor product in time ([`extended`]). The operator
//! `e^{iS} = shift ∘ (⊗_t U_t)` acts on the extended space; propagators,
//! time-ordered correlators and partition functions are traces of `e^{iS}`
//! against slot-0 projectors and per-slice insertions. Every such trace has a
//! conventional canonical counterpart ([`oracle`]) computed through an
//! independent code path (matrix products, never the extended space), so the
//! exact identities relating the two sides are testable to machine precision.
//!
//! [`oscillator`] carries the harmonic-oscillator closed-form layer (mode
//! products, mixing matrices, generating functional, Feynman propagator) and
//! [`scan`] the regularized infinite-product continuum study.
//!
//! Conventions fixed project-wide:
//! - multi-index layout: slice `t = 0` is the most significant digit,
//!   `index(i_0, …, i_{N-1}) = Σ_t i_t · M^{N-1-t}`;
//! - grid momentum states `⟨q_j|p_k⟩ = e^{i p_k q_j}/√M` with
//!   `p_k = 2πk/(MΔq)`, `k ∈ {-⌊M/2⌋, …, ⌈M/2⌉-1}`;
//! - the forward time shift maps slot contents `t → t+1 (mod N)`, i.e.
//!   `|q_1 q_2 … q_N⟩ → |q_N q_1 … q_{N-1}⟩` on basis states.

pub mod error;
pub mod extended;
pub mod linalg;
pub mod oracle;
pub mod oscillator;
pub mod scan;
pub mod slice;

pub use error::CoreError;
pub use extended::{ActionSpec, ExtendedState, InsertionList};
pub use oracle::EvolutionSchedule;
pub use oscillator::{ModeSpectrum, OneBodyMatrix, SourceSpec};
pub use scan::ScanConfig;
pub use slice::{SliceOperator, SliceSpace};

/// Complex double precision used throughout.
pub type C64 = num_complex::Complex64;
