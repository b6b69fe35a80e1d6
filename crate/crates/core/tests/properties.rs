use beauville_core::{
    canonicalize, dualizing_order, find_witness, h1_dimension, standard_to_v, surface,
    v_to_standard, verify_certificate, Certificate, CharacterStd, CharacterV, Error, GroupHom,
    Mat2, Modulus, SurfaceConfig,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big_mod(x: BigInt, n: u32) -> u32 {
    let n = BigInt::from(n);
    let r = ((x % &n) + &n) % &n;
    u32::try_from(r).unwrap()
}

fn moduli() -> impl Strategy<Value = Modulus> {
    (5u32..(1 << 15)).prop_map(|n| Modulus::new(n).unwrap())
}

fn surface_moduli() -> impl Strategy<Value = Modulus> {
    prop::sample::select(vec![7u32, 11, 13, 17, 19, 23, 25, 29, 31, 35])
        .prop_map(|n| Modulus::new(n).unwrap())
}

proptest! {
    #[test]
    fn ring_operations_match_big_integers(
        n in moduli(),
        x in any::<i32>(),
        y in any::<i32>(),
        z in any::<i32>(),
    ) {
        let (a, b, c) = (n.residue(x as i64), n.residue(y as i64), n.residue(z as i64));
        let (bx, by, bz) = (BigInt::from(x), BigInt::from(y), BigInt::from(z));
        prop_assert_eq!((a * b * c).value(), big_mod(&bx * &by * &bz, n.get()));
        prop_assert_eq!((a * (b + c)).value(), big_mod(&bx * (&by + &bz), n.get()));
        prop_assert_eq!((a - b).value(), big_mod(&bx - &by, n.get()));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(canonicalize(x as i64, n).value(), big_mod(bx, n.get()));
    }

    #[test]
    fn inverse_is_an_involution(n in moduli(), x in any::<i64>()) {
        let a = n.residue(x);
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(a.is_unit());
                prop_assert_eq!((a * inv).value(), 1);
                prop_assert_eq!(inv.inverse().unwrap(), a);
            }
            Err(Error::NotAUnit { .. }) => prop_assert!(!a.is_unit()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn characters_round_trip(n in surface_moduli(), s in any::<i32>(), t in any::<i32>()) {
        let chi = CharacterV::new(s as i64, t as i64, n);
        prop_assert_eq!(standard_to_v(v_to_standard(chi).unwrap()), chi);
        let std = CharacterStd::new(s as i64, t as i64, n);
        prop_assert_eq!(v_to_standard(standard_to_v(std)).unwrap(), std);
    }

    #[test]
    fn psi_and_phi_are_dual(
        n in surface_moduli(),
        entries in prop::array::uniform4(0i64..1000),
        g in (0u32..1000, 0u32..1000),
        s in 0i64..1000,
        t in 0i64..1000,
    ) {
        // <phi(chi), g> = <chi, psi(g)> with the standard pairing.
        let psi = Mat2::new([[entries[0], entries[1]], [entries[2], entries[3]]], n);
        let hom = GroupHom::from_psi_std(psi).unwrap();
        let chi = CharacterV::new(s, t, n);
        let g = (g.0 % n.get(), g.1 % n.get());
        let pair = |c: CharacterV, g: (u32, u32)| {
            let (x, y) = v_to_standard(c).unwrap().coords();
            n.residue(x as i64 * g.0 as i64 + y as i64 * g.1 as i64)
        };
        prop_assert_eq!(pair(hom.phi(chi), g), pair(chi, hom.psi(g)));
        prop_assert_eq!(GroupHom::from_phi_v(hom.phi_v()).unwrap().psi_std(), psi);
    }

    #[test]
    fn keyed_and_naive_counts_agree(
        n in surface_moduli(),
        entries in prop::array::uniform4(0i64..1000),
    ) {
        let psi = Mat2::new([[entries[0], entries[1]], [entries[2], entries[3]]], n);
        let cfg = SurfaceConfig::new(GroupHom::from_psi_std(psi).unwrap()).unwrap();
        for m in 0..=cfg.r() {
            prop_assert_eq!(
                h1_dimension(m, &cfg).unwrap(),
                surface::naive::h1_dimension(m, &cfg).unwrap()
            );
            prop_assert_eq!(
                h1_dimension(m, &cfg).unwrap(),
                h1_dimension(cfg.r() - m, &cfg).unwrap()
            );
        }
    }

    #[test]
    fn certificates_survive_json(n in prop::sample::select(vec![7u32, 11, 13, 17]), m in 1u32..14) {
        let n = Modulus::new(n).unwrap();
        prop_assume!(m + 4 <= n.get());
        let cert = find_witness(n, m).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &cert);
        prop_assert!(verify_certificate(&back).valid);
    }

    #[test]
    fn dualizing_order_is_least_multiple(r in 1u32..200, t in 1u32..200) {
        let k = dualizing_order(r, t);
        prop_assert_eq!((k * r) % t, 0);
        prop_assert!((1..k).all(|j| (j * r) % t != 0));
    }
}
