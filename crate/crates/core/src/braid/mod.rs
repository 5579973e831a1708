//! Braid words, the named builders, and two independent solvers for the word
//! problem.

mod artin;
mod builders;
mod equality;
mod garside;
mod permutation;
mod word;

pub use artin::{artin_images, artin_images_bounded, is_equal_artin, FreeWord};
pub use builders::{build_delta, build_pi, build_theta, garside_delta, interleaved_deltas};
pub use equality::{commute, is_equal, ARTIN_IMAGE_BUDGET};
pub use garside::is_equal_garside;
pub use permutation::{permutation, Permutation};
pub use word::{
    compose, exponent_sum, flip_star, free_reduce, invert, iota, make_word, BraidWord, Letter,
    Sign,
};
