//! Property suites; each runs 100 cases from a fixed seed.

mod common;

use common::props;

#[test]
fn field_axioms() {
    props::field_axioms().unwrap();
}

#[test]
fn orbit_stabilizer() {
    props::orbit_stabilizer().unwrap();
}

#[test]
fn euler_identity() {
    props::euler_identity().unwrap();
}

#[test]
fn action_associativity() {
    props::action_associativity().unwrap();
}

#[test]
fn closure_idempotence() {
    props::closure_idempotence().unwrap();
}
