use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use twophoton_core::scenario::preset;
use twophoton_core::scenario::sweep::spectrum_params;
use twophoton_core::scenario::{load_config, render, run_sweep, OutputFormat, ScenarioConfig, ScenarioParams};

#[derive(Parser)]
#[command(name = "twophoton", version, about = "Two-photon rates of quantum dots in photonic crystal cavities")]
struct Cli {
    /// Built-in parameter set used as the base for every command.
    #[arg(long, global = true, value_name = "NAME")]
    preset: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sweep described by a TOML scenario file.
    Sweep {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rates versus lateral field, 0 to 2 V/um.
    Fig3a {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// TPSE spectrum around the mode-2 resonance at 0.75 V/um.
    Fig3b {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Purcell and TPA enhancement factors of a mode pair on resonance.
    #[command(allow_negative_numbers = true)]
    Enhancement {
        #[arg(long)]
        q1: Option<f64>,
        #[arg(long)]
        q2: Option<f64>,
        /// Mode-1 volume in units of (lambda1/n)^3.
        #[arg(long)]
        v1_cubic_wavelengths: Option<f64>,
        /// Mode-2 volume in units of (lambda2/n)^3.
        #[arg(long)]
        v2_cubic_wavelengths: Option<f64>,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

fn base_params(name: Option<&str>) -> Result<ScenarioParams> {
    let name = name.unwrap_or(preset::PAPER_FIG3);
    preset::lookup(name).ok_or_else(|| anyhow!("invalid configuration: preset: unknown preset {name:?}"))
}

fn emit(config: &ScenarioConfig, out: &OutputArgs) -> Result<()> {
    let result = run_sweep(config)?;
    let format = out.format.map(OutputFormat::from).unwrap_or(config.params.output.format);
    let text = render(&result, format)?;
    match out.output.as_deref().or(config.params.output.path.as_deref()) {
        Some(path) => write_file(path, &text),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes()).context("writing to stdout")?;
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn enhancement(
    preset_name: Option<&str>,
    q1: Option<f64>,
    q2: Option<f64>,
    v1: Option<f64>,
    v2: Option<f64>,
) -> Result<()> {
    let mut params = base_params(preset_name)?;
    if let Some(q) = q1 {
        params.mode1.q = q;
    }
    if let Some(q) = q2 {
        params.mode2.q = q;
    }
    if let Some(v) = v1 {
        params.mode1.volume_cubic_wavelengths = v;
    }
    if let Some(v) = v2 {
        params.mode2.volume_cubic_wavelengths = v;
    }
    let setup = ScenarioConfig::from_params(params)?.setup;
    let host = setup.dot.host;
    let f1 = twophoton_core::cavity::purcell_factor_at(setup.mode1.omega_c, host, &setup.mode1)?;
    let f2 = twophoton_core::cavity::purcell_factor_at(setup.mode2.omega_c, host, &setup.mode2)?;
    let [d1, d2] = &setup.tpa_drives;
    let g1 = twophoton_core::rates::tpa_enhancement_factor(d1, &setup.mode1, host)?;
    let g2 = twophoton_core::rates::tpa_enhancement_factor(d2, &setup.mode2, host)?;
    let mut out = std::io::stdout().lock();
    for (name, v) in [("F1", f1), ("F2", f2), ("F1F2", f1 * f2), ("G1", g1), ("G2", g2), ("G1G2", g1 * g2)] {
        writeln!(out, "{name} = {v:.16e}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let preset_name = cli.preset.as_deref();
    match cli.command {
        Command::Sweep { config, out } => {
            if let Some(name) = preset_name {
                base_params(Some(name))?;
            }
            let config = load_config(&config, preset_name)?;
            emit(&config, &out)
        }
        Command::Fig3a { out } => emit(&ScenarioConfig::from_params(base_params(preset_name)?)?, &out),
        Command::Fig3b { out } => {
            emit(&ScenarioConfig::from_params(spectrum_params(base_params(preset_name)?))?, &out)
        }
        Command::Enhancement {
            q1,
            q2,
            v1_cubic_wavelengths,
            v2_cubic_wavelengths,
        } => enhancement(preset_name, q1, q2, v1_cubic_wavelengths, v2_cubic_wavelengths),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
