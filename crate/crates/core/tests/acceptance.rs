//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and fails
//! if any criterion fails. Run with `--nocapture` to see the lines.

use std::collections::BTreeMap;
use std::error::Error as StdError;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use antialg_core::adjoint::{build_adjoint, match_k1, match_osp12, osp12_images, verify_adjoint_consistency};
use antialg_core::algebra::{catalog, k3, osp12, WeightWindow};
use antialg_core::axioms::{check_jordan_superalgebra, check_lie_antialgebra, half_unit_result, AxiomReport, Status};
use antialg_core::enveloping::{
    bg_check, build_env_antialgebra, build_env_superalgebra, casimir, check_substitution, cubic_images, free_product,
    ghost_casimir, indexed_letter, irreducible_words, jordan_superproduct, k1_quotient, k1_quotient_images, letter_name,
    pbw_check, pi_images, pi_images_via, pi_map, substitute, twisted_adjoint, BracketConvention, RewriteSystem,
    WordElement,
};
use antialg_core::representations::{
    check_la_module, check_la_representation, check_lie_representation, density_antialgebra_check, diffop_rep,
    extend_representation, irr_consistency, to_osp12, v_ad, Representation,
};
use antialg_core::{Element, Scalar, Weight};

type Outcome = Result<String, Box<dyn StdError>>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), Box<dyn StdError>> {
    if cond {
        Ok(())
    } else {
        Err(msg.into().into())
    }
}

fn ensure_report(r: &AxiomReport) -> Result<(), Box<dyn StdError>> {
    match r.failures().next() {
        None => Ok(()),
        Some(f) => Err(format!("{} fails: {}", f.id, f.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()).into()),
    }
}

fn totals(r: &AxiomReport) -> (usize, usize) {
    r.entries.iter().fold((0, 0), |(c, s), e| (c + e.checked, s + e.skipped))
}

fn k3_env(degree: u32) -> Result<RewriteSystem, Box<dyn StdError>> {
    let mut rs = build_env_antialgebra(&k3())?;
    rs.complete(degree)?;
    Ok(rs)
}

fn vanishes(rs: &RewriteSystem, lhs: &str, rhs: &str) -> Result<(), Box<dyn StdError>> {
    let d = rs.parse(lhs)? - rs.parse(rhs)?;
    let nf = rs.normal_form(&d)?;
    ensure(nf.is_zero(), format!("{lhs} = {rhs} leaves {}", rs.show(&nf)))
}

fn pow(letter: &str, k: usize) -> String {
    if k == 0 {
        String::new()
    } else {
        format!("{letter}^{k}")
    }
}

fn as_word_element(rs: &RewriteSystem, e: &Element) -> Result<WordElement, Box<dyn StdError>> {
    let mut out = WordElement::zero();
    for (g, c) in e.iter() {
        out = out + rs.letter(&letter_name(g))?.scaled(*c);
    }
    Ok(out)
}

fn k3_axiom_suite() -> Outcome {
    let k = k3();
    let mut r = check_lie_antialgebra(&k)?;
    r.extend(check_jordan_superalgebra(&k)?);
    r.push(half_unit_result(&k, &k.find("eps")?)?);
    ensure_report(&r)?;
    let (checked, skipped) = totals(&r);
    ensure(skipped == 0, "tuples skipped on a finite algebra")?;
    let ids: Vec<_> = r.entries.iter().map(|e| e.id.as_str()).collect();
    Ok(format!("{} over {checked} tuples", ids.join(", ")))
}

fn ak1_axioms() -> Outcome {
    let s = catalog("AK1", Some(WeightWindow::ints(-6, 6)))?;
    let r = check_lie_antialgebra(&s)?;
    ensure_report(&r)?;
    let (checked, skipped) = totals(&r);
    ensure(checked > 0, "nothing checked")?;
    Ok(format!("{checked} admissible tuples, {skipped} skipped"))
}

fn k3_adjoint_is_osp12() -> Outcome {
    let adj = build_adjoint(&k3())?;
    let r = match_osp12(&adj)?;
    ensure_report(&r)?;
    ensure(adj.even_dimension() == 3, format!("even dimension {}", adj.even_dimension()))?;
    let pairs = r.get("osp(1|2) brackets").map_or(0, |e| e.checked);
    Ok(format!("{pairs} generator pairs, even dimension 3"))
}

fn ak1_adjoint_is_k1() -> Outcome {
    let window = WeightWindow::ints(-6, 6);
    let adj = build_adjoint(&catalog("AK1", Some(window))?)?;
    let m = match_k1(&adj)?;
    ensure_report(&m.report)?;
    let dims = adj.even_dimension_by_weight();
    for n in window.weights_in_coset(Weight::ZERO) {
        let d = dims.get(&n).copied().unwrap_or(0);
        ensure(d == 1, format!("weight {n} carries {d} classes"))?;
    }
    ensure(dims.len() == 13, format!("{} even weights", dims.len()))?;
    ensure(m.normalization.len() == 13, "normalization incomplete")?;
    Ok(format!("13 even weights of dimension 1, {} normalizations", m.normalization.len()))
}

fn adjoint_consistency() -> Outcome {
    let mut parts = Vec::new();
    for spec in [k3(), catalog("AK1", Some(WeightWindow::ints(-6, 6)))?] {
        let r = verify_adjoint_consistency(&build_adjoint(&spec)?)?;
        ensure_report(&r)?;
        let (checked, skipped) = totals(&r);
        parts.push(format!("{}: {checked} checked, {skipped} skipped", spec.name()));
    }
    Ok(parts.join("; "))
}

fn k3_enveloping() -> Outcome {
    let rs = k3_env(12)?;
    ensure(rs.log().is_empty(), format!("completion added {} rules", rs.log().len()))?;
    for n in 0..=8u32 {
        let mut got: Vec<String> = irreducible_words(&rs, n).iter().map(|w| rs.alphabet().show_word(w)).collect();
        let mut expected = Vec::new();
        for k in 0..=n as usize {
            let mut letters = vec!["A"; k];
            letters.extend(vec!["B"; n as usize - k]);
            expected.push(if n == 0 { "1".to_string() } else { letters.join(" ") });
        }
        for k in 0..n as usize {
            let mut letters = vec!["E"];
            letters.extend(vec!["A"; k]);
            letters.extend(vec!["B"; n as usize - 1 - k]);
            expected.push(letters.join(" "));
        }
        got.sort();
        expected.sort();
        ensure(got == expected, format!("degree {n}: {got:?}"))?;
    }
    let pbw = pbw_check(&k3(), 8)?;
    ensure(pbw.holds, format!("PBW fails: {:?}", pbw.first_mismatch))?;
    for (n, (gr, g)) in pbw.totals() {
        ensure(gr == g && gr == 2 * n as usize + 1, format!("degree {n}: {gr} vs {g}"))?;
    }
    let mut identities = 0;
    for p in 1..=4usize {
        for l in ["A", "B"] {
            vanishes(&rs, &format!("{l}^{} E", 2 * p), &format!("E {l}^{}", 2 * p))?;
            let odd = 2 * p + 1;
            vanishes(&rs, &format!("{l}^{odd} E"), &format!("{l}^{odd} - E {l}^{odd}"))?;
            identities += 2;
        }
        vanishes(&rs, &format!("B A^{}", 2 * p), &format!("A^{} B - {p} A^{}", 2 * p, 2 * p - 1))?;
        vanishes(&rs, &format!("B A^{}", 2 * p + 1), &format!("A^{} B - E A^{} - {p} A^{}", 2 * p + 1, 2 * p, 2 * p))?;
        vanishes(&rs, &format!("B^{} A", 2 * p), &format!("A B^{} - {p} B^{}", 2 * p, 2 * p - 1))?;
        vanishes(&rs, &format!("B^{} A", 2 * p + 1), &format!("A B^{} - E B^{} - {p} B^{}", 2 * p + 1, 2 * p, 2 * p))?;
        identities += 4;
    }
    for k in 0..=4usize {
        for l in 0..=4usize {
            if k + l == 0 {
                continue;
            }
            let m = format!("{} {}", pow("A", k), pow("B", l));
            if (k + l) % 2 == 0 {
                vanishes(&rs, &format!("{m} E"), &format!("E {m}"))?;
                identities += 1;
            } else {
                vanishes(&rs, &format!("{m} E"), &format!("{m} - E {m}"))?;
                vanishes(&rs, &format!("E {m} E"), "0")?;
                identities += 2;
            }
        }
    }
    Ok(format!("no rules added, 2n+1 words for n <= 8, {identities} identity instances"))
}

fn ak1_enveloping() -> Outcome {
    let window = WeightWindow::ints(-4, 4);
    let s = catalog("AK1", Some(window))?;
    let bare = build_env_antialgebra(&s)?;
    let mut rs = bare.clone();
    rs.complete(4)?;
    let a = |rs: &RewriteSystem, i: Weight| rs.parse(&format!("a_{i}"));
    let halves = window.weights_in_coset(Weight::half(1));
    let (mut checked, mut bare_differs) = (0, false);
    for &i in &halves {
        for &j in &halves {
            for &k in &halves {
                let l = i + j - k;
                if !halves.contains(&l) {
                    continue;
                }
                let sym = |x: Weight, y: Weight| -> Result<WordElement, Box<dyn StdError>> {
                    let (ax, ay) = (a(&rs, x)?, a(&rs, y)?);
                    Ok(free_product(&ax, &ay) + free_product(&ay, &ax))
                };
                let d = sym(i, j)? - sym(k, l)?;
                ensure(rs.normal_form(&d)?.is_zero(), format!("a_{i} a_{j} + a_{j} a_{i} differs from the split {k}, {l}"))?;
                bare_differs |= !bare.normal_form(&d)?.is_zero();
                checked += 1;
            }
        }
    }
    ensure(bare_differs, "split independence already holds before completion")?;
    let pbw = pbw_check(&s, 2)?;
    let m = pbw.first_mismatch.ok_or("PBW holds")?;
    ensure(m.degree == 2 && m.gr < m.g, format!("first mismatch {m:?}"))?;
    let (gr, g) = pbw.totals()[&2];
    Ok(format!(
        "{} rules derived, {checked} split pairs agree; degree 2 weight {}: Gr {} < G {} (totals {gr} vs {g})",
        rs.log().len(),
        m.weight,
        m.gr,
        m.g
    ))
}

fn bg_conditions() -> Outcome {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for img in cubic_images(&k3())? {
        if img.family == "u3" {
            continue;
        }
        let image = img.image.ok_or("window error on a finite algebra")?;
        ensure(image.is_zero(), format!("{} {:?} maps to {image}", img.family, img.tuple))?;
        *counts.entry(img.family).or_default() += 1;
    }
    let s = catalog("AK1", Some(WeightWindow::ints(-3, 3)))?;
    let r = bg_check(&s)?;
    let u3 = r.get("u3 (i)").ok_or("no u3 entry")?;
    ensure(u3.status == Status::Fail, "u3 (i) holds on AK1")?;
    let w = u3.witness.as_ref().ok_or("no witness")?;
    Ok(format!("K3 instances u0/u1/u2 = {:?} all map to 0; AK1 u3 (i) fails at ({})", counts.values().collect::<Vec<_>>(), w.tuple.join(", ")))
}

fn jordan_counterexample() -> Outcome {
    let rs = k3_env(10)?;
    let p = |s: &str| rs.parse(s);
    let j = |x: &WordElement, y: &WordElement| jordan_superproduct(&rs, x, y);
    let left = rs.show(&j(&p("E A B")?, &j(&p("E B^2")?, &p("E B")?)?)?);
    let right = rs.show(&j(&j(&p("E A B")?, &p("E B^2")?)?, &p("E B")?)?);
    ensure(left == "1/4 E A B B B B", format!("left side {left}"))?;
    ensure(right == "1/2 E A B B B B - 1/4 E B B B", format!("right side {right}"))?;
    Ok(format!("{left} vs {right}"))
}

fn projection() -> Outcome {
    let k = k3();
    let adj = build_adjoint(&k)?;
    let dst = k3_env(8)?;
    let osp = build_env_superalgebra(&osp12(), BracketConvention::Commutator)?;
    let images = pi_images_via(&adj, &osp, &osp12_images(&adj)?, &dst)?;
    let hom = check_substitution("osp(1|2) -> U(K3)", &osp, &images, &dst)?;
    ensure(hom.passed(), format!("{:?}", hom.witness))?;
    ensure(substitute(&images, &dst, &casimir(&osp)?)?.is_zero(), "pi(C) != 0")?;
    let g = substitute(&images, &dst, &ghost_casimir(&osp)?)?;
    let sq = dst.product(&g, &g)? - dst.unit().scaled(Scalar::QUARTER);
    ensure(dst.normal_form(&sq)?.is_zero(), "pi(Gamma^2 - 1/4) != 0")?;

    let gamma = ghost_casimir(&osp)?;
    for x in ["A", "B", "H", "E", "F"] {
        let t = twisted_adjoint(&osp, &osp.parse(x)?, &gamma)?;
        ensure(t.is_zero(), format!("twisted action of {x} leaves {}", osp.show(&t)))?;
    }

    let sym = |u: &WordElement, v: &WordElement| (free_product(u, v) + free_product(v, u)).scaled(Scalar::HALF);
    let mut pairs = 0;
    for x in k.evens() {
        for a in k.odds() {
            for b in k.odds() {
                let ax = as_word_element(&dst, &k.product_gen(&a, &x)?)?;
                let bx = as_word_element(&dst, &k.product_gen(&b, &x)?)?;
                let (wa, wb) = (dst.letter(&letter_name(&a))?, dst.letter(&letter_name(&b))?);
                let d = dst.normal_form(&(sym(&ax, &wb) - sym(&wa, &bx)))?;
                ensure(d.is_zero(), format!("pair relation ({a} {x}) {b} - {a} ({b} {x}) leaves {}", dst.show(&d)))?;
                pairs += 1;
            }
        }
    }

    let src = build_env_superalgebra(adj.spec(), BracketConvention::Symmetrized)?;
    let pi = pi_images(&adj, &src, &dst)?;
    let kernel = check_substitution("U(g_a) relations", &src, &pi, &dst)?;
    ensure(kernel.passed(), format!("{:?}", kernel.witness))?;
    let ab = dst.show(&pi_map(&adj, &src, &dst, &src.parse("A.B")?)?);
    ensure(ab == "A B - 1/2 E", format!("pi(A.B) = {ab}"))?;
    Ok(format!("Casimir, ghost Casimir, 5 twisted generators, {pairs} pair relations, {} defining relations", kernel.checked))
}

fn k1_quotient_counts() -> Outcome {
    let window = WeightWindow::ints(-4, 4);
    let mut q = k1_quotient(window)?;
    q.complete(5)?;
    let mut ak1 = build_env_antialgebra(&catalog("AK1", Some(window))?)?;
    ak1.complete(5)?;
    let images = k1_quotient_images(&q, &ak1)?;
    let hom = check_substitution("quotient -> AK1", &q, &images, &ak1)?;
    ensure(hom.passed(), format!("{:?}", hom.witness))?;
    let mut cells = 0;
    for n in 0..=3 {
        let count = |rs: &RewriteSystem| {
            let mut m: BTreeMap<Weight, usize> = BTreeMap::new();
            for w in irreducible_words(rs, n) {
                *m.entry(rs.weight(&w)).or_default() += 1;
            }
            m.retain(|w, _| window.contains(*w));
            m
        };
        let (cq, ca) = (count(&q), count(&ak1));
        ensure(cq == ca, format!("degree {n}: {cq:?} vs {ca:?}"))?;
        cells += cq.len();
    }
    let (n, i) = (Weight::int(1), Weight::half(1));
    let x = indexed_letter(&q, "x", n)?;
    let a = indexed_letter(&q, "a", i)?;
    let e = indexed_letter(&q, "eps", n)?;
    let lhs = free_product(&x, &a) - free_product(&a, &x);
    let c = (i + i - n).to_scalar() * Scalar::HALF;
    let rhs = (free_product(&e, &a) + free_product(&a, &e)).scaled(c);
    ensure(q.normal_form(&(lhs - rhs))?.is_zero(), "derived identity fails")?;
    Ok(format!("{cells} (degree, weight) cells agree, derived identity holds"))
}

fn osp_rep(rep: &Representation) -> Result<Scalar, Box<dyn StdError>> {
    let adj = build_adjoint(&k3())?;
    let ext = extend_representation(rep, &adj)?;
    ensure_report(&ext.report)?;
    let sigma = ext.sigma.as_ref().ok_or("no rescaling")?;
    ensure_report(&check_lie_representation(&to_osp12(sigma, &adj)?)?)?;
    Ok(ext.scale.ok_or("no scale")?)
}

fn representations() -> Outcome {
    let diffop = diffop_rep(6)?;
    ensure_report(&check_la_representation(&diffop)?)?;
    ensure_report(&check_la_module(&v_ad())?)?;
    let accepted: Vec<(u32, u8)> =
        (0..=5).flat_map(|m| [0u8, 1].map(|s| (m, s))).filter(|&(m, s)| irr_consistency(m, s).consistent).collect();
    ensure(accepted == [(1, 1)], format!("accepted {accepted:?}"))?;
    let c1 = osp_rep(&diffop)?;
    let c2 = osp_rep(&v_ad())?;
    Ok(format!("irr accepts {accepted:?}; osp(1|2) scales {c1} and {c2}"))
}

fn density() -> Outcome {
    let window = WeightWindow::ints(-6, 6);
    let mut holding = Vec::new();
    for lambda in [Scalar::int(-1), Scalar::ZERO, Scalar::QUARTER, Scalar::HALF, Scalar::ONE, Scalar::int(2)] {
        let r = density_antialgebra_check(lambda, window)?;
        ensure(r.well_defined.passed(), format!("split dependence at {lambda}"))?;
        let expected = lambda == Scalar::ZERO || lambda == Scalar::HALF;
        ensure(r.holds == expected, format!("lambda {lambda}: holds = {}", r.holds))?;
        if r.holds {
            holding.push(lambda.to_string());
        } else {
            let failing = [&r.anticommutator, &r.multiplicative].into_iter().find(|e| !e.passed());
            ensure(failing.and_then(|e| e.witness.as_ref()).is_some(), format!("no witness at {lambda}"))?;
        }
    }
    Ok(format!("structure exists exactly for lambda in {{{}}}", holding.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("K3 axiom suite", k3_axiom_suite),
        ("AK1 axioms on [-6, 6]", ak1_axioms),
        ("adjoint of K3 is osp(1|2)", k3_adjoint_is_osp12),
        ("adjoint of AK1 is K1 on [-6, 6]", ak1_adjoint_is_k1),
        ("adjoint consistency", adjoint_consistency),
        ("U(K3) basis, PBW and identities", k3_enveloping),
        ("U(AK1) split independence and PBW deficit", ak1_enveloping),
        ("BG conditions", bg_conditions),
        ("Jordan superproduct counterexample", jordan_counterexample),
        ("projection from U(osp(1|2))", projection),
        ("K1 quotient against U(AK1)", k1_quotient_counts),
        ("representations", representations),
        ("density modules", density),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(r) => r.map_err(|e| e.to_string()),
            Err(_) => Err("panicked".to_string()),
        };
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {title}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                println!("criterion {:>2}: FAIL  {title}: {detail} [{ms} ms]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("{} of 13 criteria pass in {:.1} s", 13 - failed.len(), start.elapsed().as_secs_f64());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
