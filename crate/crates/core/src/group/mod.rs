//! Word algebra for BS(m,n).

mod bs1n;
mod britton;
mod conjugacy;
mod normal_form;
mod params;
mod word;

pub use bs1n::{bs1n_matrix, bs1n_normal_form, Bs1nMatrix, Bs1nNormalForm};
pub use britton::{
    as_power_of_a, britton_reduce, britton_reduce_syllables, equal_elements, find_pinch,
    is_britton_reduced, remove_pinch, t_exponent, Syllable, SyllableWord,
};
pub(crate) use britton::{reduced_power, Reducer};
pub use conjugacy::{conjugacy_normalize, is_cyclically_normal, ConjugacyNormalForm};
pub use normal_form::{element_normal_form, ElementNormalForm};
pub(crate) use normal_form::normal_form_of_syllables;
pub use params::GroupParams;
pub use word::{free_reduce, parse_word, Letter, Sign, Word, MAX_PARSED_LETTERS};
