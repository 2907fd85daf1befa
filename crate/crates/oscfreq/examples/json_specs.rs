//! Oscillators defined as JSON documents: the same format the `--spec`
//! flag of the binary accepts.

use oscfreq::cli::{parse_spec, serialize_spec};
use oscfreq::{exact, iaff, ToleranceProfile};

fn main() -> oscfreq::Result<()> {
    let tol = ToleranceProfile::default();

    // u'' + 0.3u + sgn(u)·|u|^(5/3) = 0
    let document = r#"{
        "label": "soft spring with fractional stiffening",
        "terms": [
            {"kind": "odd_power", "coeff": 0.3, "exponent": 1},
            {"kind": "odd_power", "coeff": 1.0, "exponent": 1.6666666666666667}
        ]
    }"#;
    let spec = parse_spec(document)?;
    println!("parsed: {:?}\n", spec.label());
    for amplitude in [0.2, 1.0, 5.0] {
        let approx = iaff::frequency(&spec, amplitude, &tol)?.omega;
        let exact = exact::exact_frequency(&spec, amplitude, &tol)?;
        println!(
            "A = {amplitude:<4} omega = {approx:.6} (exact {exact:.6}, {:+.3}%)",
            100.0 * (approx - exact) / exact
        );
    }

    // Specs serialize back to the same document format.
    println!("\nround-trip document:\n{}", serialize_spec(&spec));

    // Validation failures carry the offending field path.
    let bad = r#"{"terms": [{"kind": "stretched_wire", "lambda": 1.5}]}"#;
    match parse_spec(bad) {
        Err(err) => println!("invalid document rejected: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
