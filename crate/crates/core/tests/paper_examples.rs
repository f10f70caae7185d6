//! Worked examples, checked through the named-algebra interface.

use treehopf::catalog::{convert, lookup, tensor_text};

fn product(name: &str, a: &str, b: &str) -> String {
    lookup(name).unwrap().product(a, b).unwrap().to_text()
}

fn coproduct(name: &str, a: &str) -> String {
    tensor_text(&lookup(name).unwrap().coproduct(a).unwrap())
}

fn antipode(name: &str, a: &str) -> String {
    lookup(name).unwrap().antipode(a).unwrap().to_text()
}

#[test]
fn composition_tree_coproduct() {
    assert_eq!(
        coproduct("ccsym.fl", "[1,3]"),
        "F[1] ⊗ F[1,3] + F[1,1] ⊗ F[3] + F[1,2] ⊗ F[2] + F[1,3] ⊗ F[1]"
    );
}

#[test]
fn composition_tree_products() {
    assert_eq!(
        product("ccsym.fl", "[1,3]", "[1,1]"),
        "F[1,4] + F[2,3] + F[3,2] + F[4,1]"
    );
    // the four splittings all comb to the single part of total degree 4
    assert_eq!(product("ccsym.fl", "[1,3]", "[2]"), "4F[5]");
    assert_eq!(product("ccsym.fr", "[1,3]", "[2]"), "2F[1,1,3] + F[1,2,2] + F[1,3,1]");
}

#[test]
fn weighted_tree_coproduct_and_product() {
    for shape in ["((. .) .)", "(. (. .))"] {
        let x = format!("{shape} [2,1,2]");
        assert_eq!(
            coproduct("cksym", &x),
            format!(
                "F(. [1]) ⊗ F({shape} [2,1,2]) + F(. [2]) ⊗ F({shape} [1,1,2]) + \
                 F((. .) [2,1]) ⊗ F((. .) [1,2]) + F({shape} [2,1,1]) ⊗ F(. [2]) + \
                 F({shape} [2,1,2]) ⊗ F(. [1])"
            )
        );
        let q = format!("{shape} [1,2,1]");
        let p = lookup("cksym").unwrap().product("(. .) [2,1]", &q).unwrap();
        let coeff = |w: &str| {
            let basis = format!("{shape} {w}");
            p.0.iter().find(|t| t.basis == basis).map(|t| t.coeff.to_string())
        };
        assert_eq!(p.0.len(), 6);
        for (w, c) in [
            ("[3,2,1]", "1"),
            ("[1,4,1]", "3"),
            ("[1,2,3]", "1"),
            ("[2,3,1]", "2"),
            ("[2,2,2]", "1"),
            ("[1,3,2]", "2"),
        ] {
            assert_eq!(coeff(w).as_deref(), Some(c), "{shape} {w}");
        }
    }
}

#[test]
fn simplex_face_coproduct() {
    assert_eq!(
        coproduct("deltasym", "{1}/3"),
        "F{}/0 ⊗ F{1}/3 + F{1}/1 ⊗ F{}/2 + F{1}/2 ⊗ F{}/1 + F{1}/3 ⊗ F{}/0"
    );
}

#[test]
fn alpha_on_the_figure_composition() {
    // the composition (3,2,1,4) sums to 10, so it is the image of a subset of [9]
    assert_eq!(convert("{3,5,6}/9", "composition").unwrap(), "[3,2,1,4]");
    assert_eq!(convert("[3,2,1,4]", "subset").unwrap(), "{3,5,6}/9");
    assert_eq!(convert("{3,5,6}/10", "composition").unwrap(), "[3,2,1,5]");
}

#[test]
fn painted_antipodes() {
    assert_eq!(antipode("psym", ". @ [.]"), "F(. @ [.])");
    assert_eq!(antipode("psym", ". @ [(. .)]"), "-F((. .) @ [., .])");
    assert_eq!(antipode("psym", "(. .) @ [(. .), .]"), "F((. (. .)) @ [., ., .])");
    // the fully painted one-node tree squares to the two fully painted trees
    assert_eq!(
        product("psym", "(. .) @ [., .]", "(. .) @ [., .]"),
        "F((. (. .)) @ [., ., .]) + F(((. .) .) @ [., ., .])"
    );
}

#[test]
fn one_sided_units_of_painted_trees() {
    let p = lookup("psym").unwrap();
    assert_eq!(
        p.product("(. .) @ [(. .), .]", ". @ [.]").unwrap().to_text(),
        "F((. .) @ [(. .), .])"
    );
    assert_eq!(
        p.product(". @ [.]", "(. .) @ [(. .), .]").unwrap().to_text(),
        "F(((. .) .) @ [., ., .])"
    );
}
