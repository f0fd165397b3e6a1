//! Binomial-coefficient sums evaluated p-adically.

mod eval;
mod ring;
mod spec;

pub use eval::{
    central_binom_stream, eval_sum, eval_sum_to, inner_convolution, inner_convolution_exact,
    max_negative_valuation, rational_binom, sum_exact, term_exact, CentralBinomStream,
    DEFAULT_GUARD, MAX_RANGE_MODULUS,
};
pub use spec::{Affine, Bound, Factor, InnerShape, Range, SumSpec, TermFactor};

#[cfg(test)]
mod tests;
