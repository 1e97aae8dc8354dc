use super::spec::{AlgebraSpec, Family, Style};
use super::WeightWindow;
use crate::error::DomainError;
use crate::kernel::{BasisVector, Element, Scalar, Weight};

/// Names accepted by [`catalog`].
pub const CATALOG: [&str; 5] = ["K3", "AK1", "osp12", "K1", "GK3"];

/// Degree cap of the materialized quadratic model `GK3`.
pub const GK3_DEGREE_CAP: usize = 3;

/// A built-in algebra. `AK1` and `K1` are infinite families and need a window.
pub fn catalog(name: &str, window: Option<WeightWindow>) -> Result<AlgebraSpec, DomainError> {
    let finite = |spec: AlgebraSpec| match window {
        Some(w) => spec.with_window(w),
        None => spec,
    };
    match name {
        "K3" => Ok(finite(k3())),
        "osp12" => Ok(finite(osp12())),
        "GK3" => Ok(finite(gk3())),
        "AK1" => Ok(AlgebraSpec::family(
            "AK1",
            Family::AntiKaplansky,
            window.ok_or_else(|| DomainError::MissingWindow(name.into()))?,
        )),
        "K1" => Ok(AlgebraSpec::family(
            "K1",
            Family::Conformal,
            window.ok_or_else(|| DomainError::MissingWindow(name.into()))?,
        )),
        _ => Err(DomainError::UnknownAlgebra(name.into())),
    }
}

fn term(c: Scalar, g: &BasisVector) -> Element {
    Element::term(c, g.clone())
}

/// The three-dimensional algebra spanned by `eps` (even, weight 0) and `a`, `b`
/// (odd, weights 1/2 and -1/2).
pub fn k3() -> AlgebraSpec {
    let eps = BasisVector::even("eps", Weight::ZERO);
    let a = BasisVector::odd("a", Weight::half(1));
    let b = BasisVector::odd("b", Weight::half(-1));
    let h = Scalar::HALF;
    let entries = vec![
        (eps.clone(), eps.clone(), term(Scalar::ONE, &eps)),
        (eps.clone(), a.clone(), term(h, &a)),
        (eps.clone(), b.clone(), term(h, &b)),
        (a.clone(), b.clone(), term(h, &eps)),
    ];
    AlgebraSpec::from_table("K3", Style::Product, vec![eps, a, b], entries).expect("K3 table is consistent")
}

/// `osp(1|2)` on `E, F, H` (even) and `A, B` (odd).
pub fn osp12() -> AlgebraSpec {
    let e = BasisVector::even("E", Weight::int(1));
    let f = BasisVector::even("F", Weight::int(-1));
    let h = BasisVector::even("H", Weight::ZERO);
    let a = BasisVector::odd("A", Weight::half(1));
    let b = BasisVector::odd("B", Weight::half(-1));
    let one = Scalar::ONE;
    let two = Scalar::int(2);
    let entries = vec![
        (h.clone(), e.clone(), term(two, &e)),
        (h.clone(), f.clone(), term(-two, &f)),
        (e.clone(), f.clone(), term(one, &h)),
        (h.clone(), a.clone(), term(one, &a)),
        (e.clone(), a.clone(), Element::zero()),
        (f.clone(), a.clone(), term(one, &b)),
        (h.clone(), b.clone(), term(-one, &b)),
        (e.clone(), b.clone(), term(one, &a)),
        (f.clone(), b.clone(), Element::zero()),
        (a.clone(), b.clone(), term(-one, &h)),
        (a.clone(), a.clone(), term(two, &e)),
        (b.clone(), b.clone(), term(-two, &f)),
    ];
    AlgebraSpec::from_table("osp12", Style::Bracket, vec![e, f, h, a, b], entries)
        .expect("osp(1|2) table is consistent")
}

/// The quadratic model of `K3`, materialized up to [`GK3_DEGREE_CAP`].
pub fn gk3() -> AlgebraSpec {
    let base = k3();
    AlgebraSpec::quadratic("GK3", &base.evens(), &base.odds(), GK3_DEGREE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn el(spec: &AlgebraSpec, c: Scalar, tok: &str) -> Element {
        Element::term(c, spec.find(tok).unwrap())
    }

    #[test]
    fn k3_products() {
        let k = k3();
        let a = k.find("a").unwrap();
        let b = k.find("b").unwrap();
        assert_eq!(k.product_gen(&a, &b).unwrap(), el(&k, Scalar::HALF, "eps"));
        assert_eq!(k.product_gen(&b, &a).unwrap(), el(&k, -Scalar::HALF, "eps"));
        assert!(k.product_gen(&a, &a).unwrap().is_zero());
        assert_eq!(k.generators().len(), 3);
    }

    #[test]
    fn ak1_products() {
        let s = catalog("AK1", Some(WeightWindow::ints(-3, 3))).unwrap();
        let e2 = s.find("eps_2").unwrap();
        let a = s.find("a_1/2").unwrap();
        assert_eq!(s.product_gen(&e2, &a).unwrap(), el(&s, Scalar::HALF, "a_5/2"));
        let a3 = s.find("a_3/2").unwrap();
        assert_eq!(s.product_gen(&a, &a3).unwrap(), el(&s, Scalar::HALF, "eps_2"));
    }

    #[test]
    fn ak1_window_is_closed() {
        let s = catalog("AK1", Some(WeightWindow::ints(-3, 3))).unwrap();
        let e2 = s.find("eps_2").unwrap();
        let a = s.find("a_3/2").unwrap();
        match s.product_gen(&e2, &a) {
            Err(Error::Window(w)) => assert_eq!(w.weight, Weight::half(7)),
            other => panic!("expected window error, got {other:?}"),
        }
        assert!(matches!(s.find("eps_5"), Err(Error::Window(_))));
        assert!(matches!(s.find("zeta"), Err(Error::Domain(_))));
    }

    #[test]
    fn ak1_contains_rescaled_k3() {
        let s = catalog("AK1", Some(WeightWindow::ints(-2, 2))).unwrap();
        let k = k3();
        let image = |g: &BasisVector| match g.name() {
            "eps" => el(&s, Scalar::ONE, "eps_0"),
            "a" => el(&s, Scalar::ONE, "a_1/2"),
            _ => el(&s, -Scalar::ONE, "a_-1/2"),
        };
        for u in k.generators() {
            for v in k.generators() {
                let lhs = s.product(&image(u), &image(v)).unwrap();
                let rhs = k.product_gen(u, v).unwrap().map_linear(image);
                assert_eq!(lhs, rhs, "{u}*{v}");
            }
        }
    }

    #[test]
    fn osp_bracket() {
        let o = osp12();
        let a = o.find("A").unwrap();
        let b = o.find("B").unwrap();
        assert_eq!(o.product_gen(&a, &b).unwrap(), el(&o, -Scalar::ONE, "H"));
        assert_eq!(o.product_gen(&b, &a).unwrap(), el(&o, -Scalar::ONE, "H"));
        let h = o.find("H").unwrap();
        let e = o.find("E").unwrap();
        assert_eq!(o.product_gen(&e, &h).unwrap(), el(&o, Scalar::int(-2), "E"));
    }

    #[test]
    fn families_need_windows() {
        assert!(matches!(catalog("AK1", None), Err(DomainError::MissingWindow(_))));
        assert!(matches!(catalog("K7", None), Err(DomainError::UnknownAlgebra(_))));
    }

    #[test]
    fn k1_brackets() {
        let s = catalog("K1", Some(WeightWindow::ints(-4, 4))).unwrap();
        let x2 = s.find("x_2").unwrap();
        let a = s.find("a_1/2").unwrap();
        // 1/2 (1/2 - 1) a_5/2
        assert_eq!(s.product_gen(&x2, &a).unwrap(), el(&s, Scalar::new(-1, 4), "a_5/2"));
        assert_eq!(s.product_gen(&a, &x2).unwrap(), el(&s, Scalar::new(1, 4), "a_5/2"));
        assert_eq!(s.product_gen(&a, &a).unwrap(), el(&s, Scalar::ONE, "x_1"));
    }

    #[test]
    fn gk3_product_signs() {
        let g = gk3();
        let a = g.find("a").unwrap();
        let eb = g.find("eps.b").unwrap();
        assert_eq!(g.product_gen(&a, &eb).unwrap(), el(&g, -Scalar::ONE, "eps.a.b"));
        assert!(g.product_gen(&eb, &eb).unwrap().is_zero());
    }
}
