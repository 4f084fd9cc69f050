use hae_k3::{kkv, rhs_d_a, rhs_d_g2, Family};
use hae_verify::expr::{Atom, Expr, Key, Symbol};
use hae_verify::insertion::expand;
use hae_verify::{
    check_system, evaluate, hae_instance, k3, p2xe, reduce, CorrelatorDB, Entry, Insertion, Instance, Op, VerifyError,
};
use num_rational::BigRational;
use qjac_ring::{derive_word, Generator, MeroQJac};

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn p2(s: &str) -> cohomology::CohClass {
    p2xe::theory().geometry.parse_class(s).unwrap()
}

fn key(beta: i64, slots: &[(i64, usize)]) -> Key {
    Key { beta, slots: slots.to_vec() }
}

#[test]
fn string_equation() {
    let th = p2xe::theory();
    // ch~3(1) ch~2(H^2p) ch~2(H^2): dimension 0 + 4 + 2 = 6
    let rest = [(2, 11), (2, 8)];
    let with = reduce(&th, 1, &[(3, 0), rest[0], rest[1]]).unwrap();
    assert_eq!(with, reduce(&th, 1, &rest).unwrap().derive(1, 0).unwrap());
    assert_eq!(with.terms.len(), 1);
    let (s, _) = with.terms.iter().next().unwrap();
    assert_eq!(s.atom().n_p, 1);
}

#[test]
fn ch1_vanishes() {
    let th = p2xe::theory();
    for idx in 0..12 {
        assert!(reduce(&th, 1, &[(1, idx), (2, 11), (2, 8)]).unwrap().is_zero());
    }
}

#[test]
fn divisor_equation_line_class() {
    let th = p2xe::theory();
    let rest = [(3, 11)];
    let with = reduce(&th, 1, &[(2, 4), (3, 11)]).unwrap();
    assert_eq!(with, reduce(&th, 1, &rest).unwrap());
    let twice = reduce(&th, 2, &[(2, 4), (2, 11), (2, 11), (3, 8)]).unwrap();
    let base = reduce(&th, 2, &[(2, 11), (2, 11), (3, 8)]).unwrap();
    assert_eq!(twice, base.scale(&MeroQJac::constant(r(2))));
}

#[test]
fn ch0_and_w_rules() {
    let th = p2xe::theory();
    let base = reduce(&th, 1, &[(3, 11)]).unwrap();
    assert_eq!(reduce(&th, 1, &[(0, 11), (3, 11)]).unwrap(), base.scale(&MeroQJac::constant(r(-1))));
    let with_w = reduce(&th, 1, &[(2, 3), (2, 11), (2, 8)]).unwrap();
    let rest = reduce(&th, 1, &[(2, 11), (2, 8)]).unwrap();
    let g2 = MeroQJac::generator(Generator::G2).scale(&r(3));
    assert_eq!(with_w, rest.derive(0, 1).unwrap().add(&rest.scale(&g2)));
}

#[test]
fn ch_expands_with_c2_correction() {
    let th = p2xe::theory();
    let terms = expand(&[Insertion::ch(4, p2("1"))], &th.geometry);
    assert_eq!(terms.len(), 2);
    assert!(terms.contains(&(r(1), vec![(4, 0)])));
    assert!(terms.contains(&(BigRational::new((-3).into(), 24.into()), vec![(2, 8)])));
    // every tabulated class is killed by c_2
    let tab = expand(&[Insertion::ch(2, p2("H^2p")), Insertion::ch(2, p2("Hp"))], &th.geometry);
    assert_eq!(tab, vec![(r(1), vec![(2, 11), (2, 7)])]);
}

#[test]
fn odd_insertions_anticommute() {
    let th = p2xe::theory();
    let ab = reduce(&th, 1, &[(2, 11), (2, 5), (2, 6)]).unwrap();
    let ba = reduce(&th, 1, &[(2, 11), (2, 6), (2, 5)]).unwrap();
    assert_eq!(ab, ba.scale(&MeroQJac::constant(r(-1))));
    assert!(reduce(&th, 1, &[(2, 11), (2, 5), (2, 5)]).unwrap().is_zero());
}

#[test]
fn da_prediction_for_point_class() {
    let th = p2xe::theory();
    let db = p2xe::load_db(&th).unwrap();
    let inst = hae_instance(Op::DA, &[Insertion::chtilde(3, p2("H^2p"))], 1, &th).unwrap();
    let pair = Symbol::Z(Atom { key: key(1, &[(2, 8), (2, 11)]), n_p: 0, n_tau: 0 });
    let single = Symbol::Z(Atom { key: key(1, &[(4, 8)]), n_p: 0, n_tau: 0 });
    assert_eq!(inst.rhs.terms.len(), 2);
    assert_eq!(inst.rhs.terms[&pair], MeroQJac::one());
    assert_eq!(inst.rhs.terms[&single], MeroQJac::one());
    let rep = check_system(&db, &[inst]);
    assert!(rep.is_consistent());
    assert_eq!(rep.predictions.len(), 1);
    assert!(rep.predictions[&key(1, &[(4, 8)])].is_zero());
}

#[test]
fn dg2_instance_on_tabulated_pair_verifies() {
    let th = p2xe::theory();
    let db = p2xe::load_db(&th).unwrap();
    let ins = [Insertion::ch(2, p2("H^2p")), Insertion::ch(2, p2("Hp"))];
    let inst = hae_instance(Op::DG2, &ins, 1, &th).unwrap();
    let lhs = evaluate(&inst.lhs, &db).unwrap();
    let rhs = evaluate(&inst.rhs, &db).unwrap();
    // 3 D_τΘ has d/dG2 equal to 6Θ
    assert_eq!(lhs, MeroQJac::generator(Generator::Theta).scale(&r(6)));
    assert_eq!(lhs, rhs);
}

#[test]
fn p2xe_table_is_consistent() {
    let th = p2xe::theory();
    let db = p2xe::load_db(&th).unwrap();
    let inst = p2xe::table_instances(&th).unwrap();
    let rep = check_system(&db, &inst);
    assert!(rep.is_consistent());
    assert!(rep.verified.len() >= 16);
    assert!(rep.predictions.contains_key(&key(1, &[(4, 8)])));
}

#[test]
fn empty_insertion_list() {
    let th = p2xe::theory();
    let inst = hae_instance(Op::DA, &[], 1, &th).unwrap();
    // fails the dimension constraint, so both sides vanish
    assert!(inst.rhs.is_zero());
    assert!(inst.lhs.is_zero());
    let inst = hae_instance(Op::DA, &[], 0, &k3::theory()).unwrap();
    assert!(inst.rhs.is_zero());
    let db = k3::db(&k3::theory(), k3::load_table().unwrap());
    assert!(evaluate(&inst.lhs, &db).unwrap().is_zero());
}

#[test]
fn single_unknown_gives_prediction() {
    let k = key(1, &[(5, 11)]);
    let inst = Instance { name: "toy".into(), lhs: Expr::zero(), rhs: Expr::key(k.clone()) };
    let rep = check_system(&CorrelatorDB::new(), &[inst]);
    assert_eq!(rep.predictions.len(), 1);
    assert!(rep.predictions[&k].is_zero());
}

#[test]
fn k3_single_insertions_match_reduced_equations() {
    let th = k3::theory();
    let table = k3::load_table().unwrap();
    let db = k3::db(&th, table.clone());
    for fam in [Family::A, Family::B, Family::C] {
        for k in 0..=4 {
            let l = if fam == Family::C { 1 } else { 0 };
            let ins = k3::family_insertions(&th, fam, k, l);
            let da = hae_instance(Op::DA, &ins, 0, &th).unwrap();
            let dg = hae_instance(Op::DG2, &ins, 0, &th).unwrap();
            assert_eq!(evaluate(&da.rhs, &db).unwrap(), kkv().mul_poly(&rhs_d_a(fam, k, l, &table).unwrap()), "{fam:?} {k}");
            assert_eq!(evaluate(&dg.rhs, &db).unwrap(), kkv().mul_poly(&rhs_d_g2(fam, k, l, &table).unwrap()), "{fam:?} {k}");
        }
    }
}

#[test]
fn k3_family_instances_verify() {
    let th = k3::theory();
    let db = k3::db(&th, k3::load_table().unwrap());
    let inst = k3::family_instances(&th, 5).unwrap();
    let rep = check_system(&db, &inst);
    assert!(rep.is_consistent());
    assert!(rep.predictions.is_empty());
    assert!(rep.undetermined.is_empty());
    assert_eq!(rep.verified.len(), inst.len());
}

#[test]
fn k3_stationary_values() {
    let th = k3::theory();
    let table = k3::load_table().unwrap();
    let db = k3::db(&th, table.clone());
    // ch~2(F) is a divisor with F·β = 1
    let z = reduce(&th, 0, &[(2, k3::F)]).unwrap();
    assert_eq!(evaluate(&z, &db).unwrap(), kkv());
    // ch_0(p) = -1 matches B_0
    let z = reduce(&th, 0, &[(0, k3::P)]).unwrap();
    assert_eq!(evaluate(&z, &db).unwrap(), kkv().mul_poly(&table.b(0).unwrap()));
    // W carries D_τ: Z(ch~3(W)) = D_τ(A_1 KKV)
    let z = reduce(&th, 0, &[(3, k3::W)]).unwrap();
    let want = derive_word(&kkv().mul_poly(&table.a(1).unwrap()), 0, 1).unwrap();
    assert_eq!(evaluate(&z, &db).unwrap(), want);
}

#[test]
fn lattice_trace_is_rejected() {
    let th = k3::theory();
    let w = th.geometry.x.basis(k3::W);
    let err = hae_instance(Op::DG2, &[Insertion::chtilde(3, w.clone()), Insertion::chtilde(3, w)], 0, &th);
    assert!(matches!(err, Err(VerifyError::Unsupported(_))));
}

#[test]
fn non_eigenvector_is_rejected() {
    let th = p2xe::theory();
    let err = hae_instance(Op::DA, &[Insertion::chtilde(3, p2("H + p"))], 1, &th);
    assert!(matches!(err, Err(VerifyError::NotEigenvector(_))));
}

#[test]
fn json_unknown_entries() {
    let th = p2xe::theory();
    let mut db = CorrelatorDB::new();
    let text = r#"[{"beta": 1, "insertions": [{"kind": "chtilde", "k": 4, "class": "H^2"}], "value": {"unknown": "x"}}]"#;
    let keys = db.load_json(&th, text).unwrap();
    assert_eq!(db.entries[&keys[0]], Entry::Unknown("x".into()));
    assert!(db.value(&keys[0]).is_none());
    // stored in a non-canonical order picks up the sign
    let theta = serde_json::to_string(&MeroQJac::generator(Generator::Theta)).unwrap();
    let text = format!(
        r#"[{{"beta": 1, "insertions": [
        {{"kind": "ch", "k": 2, "class": "Hb"}}, {{"kind": "ch", "k": 2, "class": "Ha"}},
        {{"kind": "ch", "k": 2, "class": "H^2p"}}], "value": {theta}}}]"#
    );
    let keys = db.load_json(&th, &text).unwrap();
    assert_eq!(db.value(&keys[0]).unwrap(), MeroQJac::generator(Generator::Theta).scale(&r(-1)));
}
