//! Euler and Bernoulli numbers and polynomials, harmonic numbers, per-prime
//! special values, quadratic form representations, and eta coefficients.

pub mod cache;
pub mod eta;
pub mod harmonic;
pub mod poly;
pub mod quadform;
pub mod tables;

pub use cache::{special_values, SpecialValueCache};
pub use eta::{eta_coeffs, klein_fricke};
pub use harmonic::{harmonic_exact, harmonic_padic};
pub use poly::{bernoulli_poly_at, euler_poly_at};
pub use quadform::{represent, represent_form, FormRequest, QuadFormRep, Side};
pub use tables::{
    bernoulli_number, bernoulli_table, euler_number, euler_table, BernoulliTable, EulerTable,
};
