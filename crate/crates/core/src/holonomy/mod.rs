//! Holonomy maps `H: ΩM → G` and checks of the loop-space axioms.
//!
//! Conventions: `α∘β` runs `β` first, so `H(α∘β) = H(β)H(α)`. Transport solves
//! `u' = −A(β̇)u`, `u(0) = e` and sets `H(β) = u(1)⁻¹`; for abelian groups this is
//! `exp ∮_β A`.

mod audit;
mod axioms;
mod connection;
mod map;
pub mod quadrature;

pub use audit::{draw_samples, half_cubic_warp, run_audit, AuditConfig, AuditSample, LoopFamily};
pub use axioms::{check_axiom1, check_axiom2, check_axiom3, AxiomReport};
pub use connection::{transport, ConnectionField, GaugeField, PolynomialConnection, PolynomialTerm};
pub use map::{eval_holonomy, line_integral, Backend, HolonomyMap};
