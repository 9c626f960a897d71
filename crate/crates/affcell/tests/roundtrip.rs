use affcell::{parse_cell_datum, parse_poly, write_datum};
use affcell_core::sample::{self, DatumParams};
use affcell_core::BlockShape;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn datum_text_round_trips(seed in any::<u64>(), with_unit in any::<bool>()) {
        let params = DatumParams { with_unit, ..DatumParams::default() };
        let d = sample::random_datum(&mut sample::rng(seed), params);
        let text = write_datum(&d);
        let back = parse_cell_datum(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(write_datum(&back), text);
    }

    #[test]
    fn polynomial_text_round_trips(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let shape = BlockShape::from_sizes(&[2, 1]);
        let f = sample::random_symmetric(&mut rng, &shape, 2, 3);
        let g = &f * &f.bar();
        for p in [f, g] {
            prop_assert_eq!(parse_poly(&p.to_string(), &shape).unwrap(), p);
        }
    }

    #[test]
    fn expansion_text_round_trips(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let shape = BlockShape::from_sizes(&[2, 2]);
        let e = sample::random_expansion(&mut rng, &shape, 2, 4);
        let p = parse_poly(&e.to_string(), &shape).unwrap();
        prop_assert_eq!(p, e.to_laurent().unwrap());
    }
}

#[test]
fn normalization_is_idempotent_on_corpus() {
    for entry in std::fs::read_dir("tests/data").unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let once = write_datum(&parse_cell_datum(&text).unwrap());
        let twice = write_datum(&parse_cell_datum(&once).unwrap());
        assert_eq!(once, twice, "{}", path.display());
    }
}
