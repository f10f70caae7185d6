//! Composites of cofree coalgebras are cofree on the two kinds of letters.

mod common;

use treehopf::basealg::{CSym, YSymM};
use treehopf::compose::Composite;

#[test]
fn phi_is_a_bijection_intertwining_the_coproducts() {
    common::phi_on_the_composites(4);
    common::check_phi(&Composite::new(CSym, YSymM), 4);
}

#[test]
fn primitive_dimensions_follow_the_hilbert_series() {
    common::primitive_dimensions(4, 5);
}

#[test]
fn generators_are_primitive_in_both_bases() {
    common::generators_on_the_composites(4);
}
