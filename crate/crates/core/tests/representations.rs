use antialg_core::adjoint::build_adjoint;
use antialg_core::algebra::k3;
use antialg_core::enveloping::{build_env_antialgebra, build_env_superalgebra, pi_map, BracketConvention, Word, WordElement};
use antialg_core::representations::{
    check_la_module, check_la_representation, diffop_rep, extend_representation, irr_consistency, load_representation,
    word_operator, Operator, Representation,
};
use antialg_core::enveloping::RewriteSystem;

const VAD: &str = "\
representation V of K3
even w : weight 0
odd  u : weight 1/2
odd  v : weight -1/2
eps | v = 1/2 v
eps | w = w
eps | u = 1/2 u
a   | v = w
a   | w = u
b   | w = 1/4 v
b   | u = -1/4 w
";

fn element_operator(rep: &Representation, rs: &RewriteSystem, e: &WordElement) -> Operator {
    let mut out = Operator::zero();
    for (w, c) in e.iter() {
        out.add_scaled(*c, &word_operator(rep, rs, w));
    }
    out
}

fn words(rs: &RewriteSystem, max_len: usize) -> Vec<Word> {
    let n = rs.alphabet().len() as u16;
    let mut out = vec![rs.alphabet().word(vec![])];
    let mut layer: Vec<Vec<u16>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..n {
                let mut w = w.clone();
                w.push(l);
                out.push(rs.alphabet().word(w.clone()));
                next.push(w);
            }
        }
        layer = next;
    }
    out
}

#[test]
fn extension_commutes_with_projection() {
    let k = k3();
    let adj = build_adjoint(&k).unwrap();
    let rep = diffop_rep(6).unwrap();
    let ext = extend_representation(&rep, &adj).unwrap();
    let src = build_env_superalgebra(adj.spec(), BracketConvention::Symmetrized).unwrap();
    let mut dst = build_env_antialgebra(&k).unwrap();
    dst.complete(8).unwrap();
    let mut compared = 0;
    for w in words(&src, 3) {
        let direct = word_operator(&ext.rho_tilde, &src, &w);
        let projected = element_operator(&rep, &dst, &pi_map(&adj, &src, &dst, &WordElement::basis(w.clone())).unwrap());
        for v in rep.carrier() {
            if let (Ok(x), Ok(y)) = (direct.apply_basis(v), projected.apply_basis(v)) {
                assert_eq!(x, y, "{} on {v}", src.alphabet().show_word(&w));
                compared += 1;
            }
        }
    }
    assert!(compared > 1000);
}

#[test]
fn module_from_a_definition_file() {
    let rep = load_representation(&k3(), VAD).unwrap();
    assert!(check_la_module(&rep).unwrap().passed());
    let spec = check_la_representation(&rep).unwrap();
    assert!(!spec.passed());
    let wrong = VAD.replace("b   | u = -1/4 w", "b   | u = 1/4 w");
    let bad = load_representation(&k3(), &wrong).unwrap();
    assert!(!check_la_module(&bad).unwrap().passed());
}

#[test]
fn irreducible_modules() {
    let accepted: Vec<(u32, u8)> =
        (0..=5).flat_map(|m| [0u8, 1].map(|s| (m, s))).filter(|&(m, s)| irr_consistency(m, s).consistent).collect();
    assert_eq!(accepted, [(1, 1)]);
}

#[test]
fn definition_file_errors_carry_positions() {
    let e = load_representation(&k3(), "representation V\neven w\nb | q = w\n").unwrap_err().to_string();
    assert!(e.starts_with("line 3"), "{e}");
    let e = load_representation(&k3(), "even w\n").unwrap_err().to_string();
    assert!(e.starts_with("line 1"), "{e}");
    let e = load_representation(&k3(), "representation V of AK1\n").unwrap_err().to_string();
    assert!(e.contains("AK1"), "{e}");
}
