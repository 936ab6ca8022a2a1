//! Biorthogonal linear algebra for PT-symmetric non-Hermitian Hamiltonians.
//!
//! A non-Hermitian Hamiltonian with a complete eigensystem carries two
//! families of eigenvectors, right (`H|R⟩ = E|R⟩`) and left
//! (`H†|L⟩ = E*|L⟩`), normalized so that `⟨L_i|R_j⟩ = δ_ij`. The metric
//! operator `G = Σ|L_i⟩⟨L_i|` turns them into a consistent inner-product
//! structure, and parameter derivatives of eigenvalues obey the
//! biorthogonal form of the Hellmann-Feynman theorem,
//! `dE/dθ = ⟨L|∂H/∂θ|R⟩`.
//!
//! The crate provides:
//!
//! * [`numlin`] — dense complex matrices/vectors, LU inverse, and a general
//!   (non-Hermitian) eigensolver: Hessenberg reduction, shifted QR, inverse
//!   iteration.
//! * [`biortho`] — biorthonormal systems, metric operators, G-inner
//!   products, good-observable tests, PT-phase classification.
//! * [`mhft`] — parametrized Hamiltonian families, the derivative identity,
//!   a finite-difference eigenvalue oracle with state tracking, and
//!   verification reports.
//! * [`models`] — the PT-symmetric two-level (Wang) model and the 2D
//!   oscillator with imaginary `xy` coupling, with closed forms, complex
//!   Gaussian quadrature, and a truncated ladder-operator matrix.
//! * [`dynamics`] — spectral time evolution, the time-dependent metric for
//!   the broken phase, and norm traces.
//!
//! The crate is `no_std` (with `alloc`); all routines are pure functions of
//! immutable inputs and values may be freely shared across threads.

#![no_std]

extern crate alloc;

pub mod biortho;
pub mod dynamics;
mod error;
pub mod mhft;
pub mod models;
pub mod numlin;

pub use error::{Error, Result};
pub use numlin::{ComplexMatrix, ComplexVector, EigResult, C64};

pub use biortho::{BiorthoSystem, MetricOperator, PhaseTag};
pub use mhft::{HamiltonianFamily, MhftReport};
pub use models::{NormalModes, Osc2dParams, WangParams};
