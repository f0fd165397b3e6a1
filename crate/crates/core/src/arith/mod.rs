//! Residue arithmetic modulo odd prime powers, primes, and tracked p-adics.

pub mod modular;
pub mod padic;
pub mod primes;

pub use modular::{
    jacobi, jacobi_big, mod_inverse, rational_valuation, reduce_rational, PrimePower, Residue,
};
pub use padic::PadicTracked;
pub use primes::{factorial_valuation, is_prime, isqrt, sieve_primes};
