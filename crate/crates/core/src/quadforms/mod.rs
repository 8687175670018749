//! Binary quadratic forms: reduction, composition, class groups and
//! principality, plus fundamental units of real quadratic fields.

mod classgroup;
mod form;
mod real;

pub use classgroup::{
    class_group, class_group_with_bound, is_narrow_principal, is_principal, reduced_forms,
    two_part, ClassGroup, TwoPart, DEFAULT_CLASS_BOUND,
};
pub use form::{compose, prime_form, reduce, rho, QuadForm};
pub use real::{
    compose_indefinite, cycle_of, fundamental_unit, narrow_class_number, narrow_cycles,
    reduced_indefinite_forms, wide_h2, wide_h2_with_bound, Unit,
};
