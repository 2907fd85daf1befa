//! The two built-in reference tables, rendered to stdout. `table1` is the
//! stretched-wire frequency comparison at λ = 0.5; `table2` the
//! mixed-parity period comparison at ε = 1.

use oscfreq::cli::{AmplitudeRange, CommandKind, Method, OutputFormat, RunConfig, SpecSource};
use oscfreq::ToleranceProfile;

fn table(preset: &str) -> RunConfig {
    RunConfig {
        command: CommandKind::Table {
            preset: preset.into(),
        },
        source: SpecSource::Preset {
            name: String::new(),
            params: vec![],
        },
        amplitudes: AmplitudeRange::BuiltIn,
        methods: vec![Method::Iaff],
        fixed_k: 1.0,
        output: None,
        format: OutputFormat::Text,
        tol: ToleranceProfile::default(),
    }
}

fn main() -> oscfreq::Result<()> {
    let mut out = std::io::stdout().lock();
    println!("stretched-wire frequencies, lambda = 0.5:");
    oscfreq::cli::run(&table("table1"), &mut out)?;
    println!("\nmixed-parity periods, epsilon = 1:");
    oscfreq::cli::run(&table("table2"), &mut out)?;
    Ok(())
}
