//! Amplitude sweeps as CSV, ready for external plotting: frequency of the
//! cubic wire model by three methods, with per-method error columns
//! against the quadrature oracle.

use oscfreq::cli::{AmplitudeRange, CommandKind, Method, OutputFormat, RunConfig, SpecSource};
use oscfreq::ToleranceProfile;

fn main() -> oscfreq::Result<()> {
    let config = RunConfig {
        command: CommandKind::Sweep,
        source: SpecSource::Preset {
            name: "stretched-wire-cubic".into(),
            params: vec![("lambda".into(), 0.5)],
        },
        amplitudes: AmplitudeRange::Grid {
            start: 0.02,
            end: 0.8,
            points: 12,
            log: false,
        },
        methods: vec![Method::Iaff, Method::FixedK, Method::ExactQuad],
        fixed_k: 1.0,
        output: None, // stdout; set Some(path) for atomic file output
        format: OutputFormat::Csv,
        tol: ToleranceProfile::default(),
    };
    oscfreq::cli::run(&config, &mut std::io::stdout().lock())
}
