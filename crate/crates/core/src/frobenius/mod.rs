//! Frobenius images of three graded module families: the classical
//! coinvariants, the diagonal coinvariants (through the shuffle formula) and
//! the Garsia–Haiman modules (through modified Macdonald polynomials).

pub mod coinvariant;
pub mod macdonald;
pub mod shuffle;

pub use coinvariant::{coinvariant_component, coinvariant_frobenius, coinvariant_frobenius_schur, syt_maj_generating};
pub use macdonald::{
    b_mu, content_polynomial, elementary_eval, hook_formula, macdonald_monomial_coefficient, macdonald_polynomial,
    macdonald_q_slice, qt_kostka, MacdonaldFilling,
};
pub use shuffle::{
    dr_component, is_alpha_shuffle, nabla_en, shuffle_h_coefficient, shuffle_h_polynomial, LabeledDyckPath, Step,
};
