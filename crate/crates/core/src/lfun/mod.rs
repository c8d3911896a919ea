//! Characteristic-`p` zeta values, Stickelberger elements and their
//! character values, level projections, and the report of Bernoulli-Carlitz
//! numbers divisible by a prime.

mod characters;
mod group_ring;
mod okada;
mod stickelberger;
mod zeta;

pub use characters::{
    all_characters, character_product, character_table, cyclotomic_polynomial, eval_group_ring, group_generators,
    regular_determinant, theta_eval_char, CharSpec, CycloCtx, CycloInt, ZInt,
};
pub use group_ring::GroupRingElem;
pub use okada::{okada_report, OkadaReport, OkadaRow};
pub use stickelberger::{
    partial_zeta_coeffs, stabilization_window, stickelberger_project, stickelberger_series, theta_at_one, Place,
    ThetaPoly,
};
pub use zeta::{power_sum, power_sums, zeta_neg, zeta_pos_trunc, zeta_v_adic_neg};
