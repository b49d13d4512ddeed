use nilcoxeter_web::{loewy_text, normalize_text, pirep_text};

#[test]
fn loewy_rows() {
    assert_eq!(loewy_text(4).unwrap(), "1 3 5 6 5 3 1");
    assert!(loewy_text(0).is_err());
    assert!(loewy_text(21).is_err());
}

#[test]
fn worked_example_reversal() {
    let text = normalize_text("[5,6][2,4][5,7]^2[1,4][5,8][1,9]", 9, true).unwrap();
    assert!(text.starts_with("canonical [5,6][2,4][5,7]^2[1,4][5,8][1,9]\n"));
    assert!(text.ends_with("\nreversed [1,9][5,2][9,6][2,4]^2[7,9][2,3]"));
    assert_eq!(text.lines().count(), 8);
    assert_eq!(normalize_text("[2,3][1,2]", 3, false).unwrap(), "canonical 0");
    assert!(normalize_text("[1,5]", 3, false).is_err());
}

#[test]
fn short_reversal() {
    let text = normalize_text("[2,3][1,3]", 3, false).unwrap();
    assert_eq!(text, "canonical [2,3][1,3]\nstep 1 [1,3][2,1]\nreversed [1,3][2,1]");
}

#[test]
fn representation_certificates() {
    for (n, dim) in [(3, 4), (4, 16), (5, 64)] {
        let text = pirep_text(n, 3).unwrap();
        assert!(text.starts_with(&format!("size {}, image dimension {dim} of {dim} over F3", 1 << (n - 2))), "{text}");
        assert!(text.contains(", 0 failed"));
    }
    assert!(pirep_text(4, 4).is_err());
    assert!(pirep_text(8, 3).is_err());
}
