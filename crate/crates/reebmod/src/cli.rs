//! Command-line surface: scene validation, relation listings, module
//! presentations, verdicts, homology tables, generators and the spin
//! construction.
//!
//! Exit codes: 0 success, 2 validation or scene failure, 3 incompatible
//! classifier, 4 usage error.

use crate::complex::LabeledComplex;
use crate::fiber::{Classifier, FiberType, GenusConvention, TypeRegistry};
use crate::report::{
    homology_rows, ClassJson, ClassifierReportJson, Report, RelationJson, ModuleJson,
    ValidationJson, VerdictJson,
};
use crate::ring::RingSpec;
use crate::scene_io::{
    self, parse_scene, scene_to_string, ClassifierJson, SceneOptions,
};
use crate::scenes;
use crate::verdict::RelationMode;
use crate::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "reebmod",
    version,
    about = "Labeled cell complexes, fiber-type modules, and non-vanishing certificates"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of the human rendering.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every structural invariant of a scene.
    Validate { scene: PathBuf },
    /// List the relation vectors the scene's transitions generate.
    Relations {
        scene: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
    },
    /// Present the universal quotient module and the per-type classes.
    Module { scene: PathBuf },
    /// Run the non-vanishing test, through a classifier when given.
    Check {
        scene: PathBuf,
        #[arg(long)]
        classifier: Option<PathBuf>,
    },
    /// Homology of the underlying complex.
    Homology {
        scene: PathBuf,
        /// Coefficient ring: z, z2, z3, ... (default: the scene's ring)
        #[arg(long)]
        ring: Option<String>,
    },
    /// Emit a built-in scene.
    Generate {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Inflate a graph scene into its round-fold picture.
    Spin {
        scene: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Boundary vertex to cap at the center.
        #[arg(long)]
        base: Option<String>,
        #[arg(long, default_value_t = 2)]
        dimension: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Visibility,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurfaceKindArg {
    Orientable,
    Crosscap,
    Klein,
}

#[derive(Subcommand, Debug)]
pub enum Generator {
    /// Annulus sheet splitting into two disk sheets: the sphere-bundle
    /// round fold.
    RoundFold {
        #[arg(long, default_value = "S")]
        sphere: String,
        #[arg(long, default_value = "Sigma")]
        sigma: String,
        /// Use a single fiber type for every sheet.
        #[arg(long)]
        identified: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Three sheets meeting along one circle.
    YPatch {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Doubled genus-splitting graph, odd genus.
    GenusSplit {
        #[arg(short, long)]
        genus: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Doubled genus-splitting graph, even genus.
    GenusSplitEven {
        #[arg(short, long)]
        genus: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Mirrored non-orientable transition graph over the Klein bottle.
    KleinDemo {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One loop edge over a single surface type.
    Loop {
        #[arg(long, value_enum, default_value_t = SurfaceKindArg::Orientable)]
        kind: SurfaceKindArg,
        #[arg(long, default_value_t = 1)]
        genus: u64,
        #[arg(long, default_value = "F")]
        id: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seeded random valid scene.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_types: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
        /// Keep the scene 1-dimensional.
        #[arg(long)]
        no_spin: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::IncompatibleClassifier { .. } => 3,
        Error::BadParameter(_) | Error::Unsupported(_) | Error::Io(_) => 4,
        _ => 2,
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_scene(path: &Path) -> Result<(LabeledComplex, TypeRegistry, SceneOptions)> {
    parse_scene(&read_text(path)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_ring_arg(s: &str) -> Result<RingSpec> {
    if s == "z" || s == "Z" {
        return Ok(RingSpec::Integers);
    }
    if let Some(k) = s.strip_prefix('z').or_else(|| s.strip_prefix('Z')) {
        let k: u64 = k
            .parse()
            .map_err(|_| Error::BadParameter(format!("`{s}` is not a ring; use z or z<k>")))?;
        return RingSpec::integers_mod(k);
    }
    Err(Error::BadParameter(format!(
        "`{s}` is not a ring; use z or z<k>"
    )))
}

/// Entry point used by the binary; parses arguments, prints the report,
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output with exit 0
            if e.use_stderr() {
                eprint!("{e}");
                return 4;
            }
            print!("{e}");
            return 0;
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(Output::Report(report)) => {
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_human());
            }
            report.exit
        }
        Ok(Output::Written) => 0,
        Err(e) => {
            let code = exit_code_for(&e);
            eprintln!("error: {e}");
            code
        }
    }
}

enum Output {
    Report(Report),
    Written,
}

fn dispatch(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Validate { scene } => cmd_validate(&scene).map(Output::Report),
        Command::Relations { scene, mode } => cmd_relations(&scene, mode).map(Output::Report),
        Command::Module { scene } => cmd_module(&scene).map(Output::Report),
        Command::Check { scene, classifier } => {
            cmd_check(&scene, classifier.as_deref()).map(Output::Report)
        }
        Command::Homology { scene, ring } => {
            cmd_homology(&scene, ring.as_deref()).map(Output::Report)
        }
        Command::Generate { generator } => cmd_generate(generator).map(|()| Output::Written),
        Command::Spin {
            scene,
            output,
            base,
            dimension,
        } => cmd_spin(&scene, output.as_deref(), base.as_deref(), dimension)
            .map(|()| Output::Written),
    }
}

fn cmd_validate(scene: &Path) -> Result<Report> {
    let (complex, registry, _) = load_scene(scene)?;
    let validation = complex.validate(&registry);
    let mut report = Report::new(format!("validate {}", scene.display()));
    report.exit = if validation.is_ok() { 0 } else { 2 };
    report.validation = Some(ValidationJson::from_report(&validation));
    Ok(report)
}

fn cmd_relations(scene: &Path, mode: ModeArg) -> Result<Report> {
    let (complex, registry, _) = load_scene(scene)?;
    let mode_name = match mode {
        ModeArg::Strict => "strict",
        ModeArg::Visibility => "visibility",
    };
    let relation_mode = match mode {
        ModeArg::Strict => RelationMode::Strict,
        ModeArg::Visibility => RelationMode::Visibility,
    };
    let relations = complex.curve_relations(&registry, relation_mode)?;
    let mut report = Report::new(format!("relations --mode {mode_name} {}", scene.display()));
    report.validation = Some(ValidationJson {
        ok: true,
        violations: vec![],
    });
    report.relations = Some(
        relations
            .iter()
            .map(|r| RelationJson::from_relation(&registry, r))
            .collect(),
    );
    Ok(report)
}

fn cmd_module(scene: &Path) -> Result<Report> {
    let (complex, registry, options) = load_scene(scene)?;
    let quotient =
        complex.universal_quotient(&registry, options.ring.clone(), &options.extra_relations)?;
    let mut report = Report::new(format!("module {}", scene.display()));
    report.validation = Some(ValidationJson {
        ok: true,
        violations: vec![],
    });
    report.module = Some(ModuleJson::from_quotient(&quotient));
    report.classes = Some(Report::class_table(&registry, &quotient)?);
    Ok(report)
}

fn cmd_check(scene: &Path, classifier_path: Option<&Path>) -> Result<Report> {
    let (complex, registry, options) = load_scene(scene)?;
    let mut report = Report::new(match classifier_path {
        Some(p) => format!("check --classifier {} {}", p.display(), scene.display()),
        None => format!("check {}", scene.display()),
    });
    report.validation = Some(ValidationJson {
        ok: true,
        violations: vec![],
    });

    let classifier: Option<Classifier> = match classifier_path {
        Some(p) => {
            let text = read_text(p)?;
            let json: ClassifierJson = serde_json::from_str(&text)
                .map_err(|e| Error::Scene(format!("classifier parse error: {e}")))?;
            Some(json.into_classifier()?)
        }
        None => options.classifier.clone(),
    };

    match classifier {
        Some(cl) => {
            let (compatible, offending) = complex.classifier_compatible(&registry, &cl)?;
            if !compatible {
                let offending = offending.expect("incompatible classifiers have a witness");
                report.classifier = Some(ClassifierReportJson {
                    compatible: false,
                    offending_relation: Some(RelationJson::from_relation(&registry, &offending)),
                    group_free_rank: cl.free_rank,
                    group_torsion: cl.torsion.clone(),
                });
                report.exit = 3;
                return Ok(report);
            }
            let verdict = complex.classifier_verdict(&registry, &cl)?;
            report.classifier = Some(ClassifierReportJson {
                compatible: true,
                offending_relation: None,
                group_free_rank: cl.free_rank,
                group_torsion: cl.torsion.clone(),
            });
            let mut classes = BTreeMap::new();
            for t in registry.types() {
                let coords = cl.class_of(&t.id)?;
                classes.insert(
                    t.id.clone(),
                    ClassJson {
                        coords: crate::report::coeffs(&coords),
                        is_zero: coords.iter().all(num_traits::Zero::is_zero),
                    },
                );
            }
            report.classes = Some(classes);
            report.verdict = Some(VerdictJson::from_verdict(&verdict));
        }
        None => {
            let quotient = complex.universal_quotient(
                &registry,
                options.ring.clone(),
                &options.extra_relations,
            )?;
            let verdict = complex.nonvanishing_verdict(&registry, &quotient)?;
            report.module = Some(ModuleJson::from_quotient(&quotient));
            report.classes = Some(Report::class_table(&registry, &quotient)?);
            report.verdict = Some(VerdictJson::from_verdict(&verdict));
        }
    }
    Ok(report)
}

fn cmd_homology(scene: &Path, ring_arg: Option<&str>) -> Result<Report> {
    let (complex, registry, options) = load_scene(scene)?;
    let ring = match ring_arg {
        Some(s) => parse_ring_arg(s)?,
        None => options.ring.clone(),
    };
    let summary = complex.homology_over(&registry, &ring)?;
    let mut report = Report::new(format!("homology --ring {ring} {}", scene.display()));
    report.validation = Some(ValidationJson {
        ok: true,
        violations: vec![],
    });
    report.homology = Some(homology_rows(&summary));
    Ok(report)
}

fn cmd_generate(generator: Generator) -> Result<()> {
    let (complex, registry, output) = match generator {
        Generator::RoundFold {
            sphere,
            sigma,
            identified,
            output,
        } => {
            let mut registry = TypeRegistry::new();
            registry.register(FiberType::sphere(&sphere, "standard"))?;
            let sigma_id = if identified {
                sphere.clone()
            } else {
                registry.register(FiberType::sphere(&sigma, "exotic"))?;
                sigma
            };
            let complex = scenes::round_fold(&registry, &sphere, &sigma_id)?;
            (complex, registry, output)
        }
        Generator::YPatch { output } => {
            let mut registry = TypeRegistry::new();
            for id in ["a1", "a2", "a3"] {
                registry.register(FiberType::symbolic(id, id))?;
            }
            let complex = scenes::y_patch(&registry, "a1", "a2", "a3")?;
            (complex, registry, output)
        }
        Generator::GenusSplit { genus, output } => {
            let (complex, registry) = scenes::genus_split_graph(genus)?;
            (complex, registry, output)
        }
        Generator::GenusSplitEven { genus, output } => {
            let (complex, registry) = scenes::genus_split_graph_even(genus)?;
            (complex, registry, output)
        }
        Generator::KleinDemo { output } => {
            let (complex, registry) = scenes::klein_demo()?;
            (complex, registry, output)
        }
        Generator::Loop {
            kind,
            genus,
            id,
            output,
        } => {
            let mut registry = TypeRegistry::new();
            let fiber = match kind {
                SurfaceKindArg::Orientable => FiberType::orientable_surface(&id, genus),
                SurfaceKindArg::Crosscap => {
                    FiberType::nonorientable_surface(&id, genus, GenusConvention::Crosscap)
                }
                SurfaceKindArg::Klein => {
                    FiberType::nonorientable_surface(&id, genus, GenusConvention::Klein)
                }
            };
            registry.register(fiber)?;
            let complex = scenes::loop_graph(&registry, &id)?;
            (complex, registry, output)
        }
        Generator::Random {
            seed,
            max_types,
            max_vertices,
            max_edges,
            no_spin,
            output,
        } => {
            let params = scenes::RandomSceneParams {
                max_types,
                max_vertices,
                max_edges,
                allow_spin: !no_spin,
            };
            let (complex, registry) = scenes::random_scene(seed, &params)?;
            (complex, registry, output)
        }
    };
    let options = SceneOptions {
        ring: RingSpec::Integers,
        extra_relations: vec![],
        classifier: None,
    };
    let doc = scene_io::emit_scene(&complex, &registry, &options);
    write_output(output.as_deref(), &scene_to_string(&doc))
}

fn cmd_spin(
    scene: &Path,
    output: Option<&Path>,
    base: Option<&str>,
    dimension: usize,
) -> Result<()> {
    let (complex, registry, options) = load_scene(scene)?;
    let spun = scenes::spin(&complex, &registry, base, dimension)?;
    let doc = scene_io::emit_scene(&spun, &registry, &options);
    write_output(output, &scene_to_string(&doc))
}
