//! Scene files, command reports, SVG output and the commands of the
//! `grassmann` tool.

mod commands;
pub mod report;
pub mod scene;
pub mod svg;

pub use commands::{
    cmd_check10, cmd_conic_sixth, cmd_eval, cmd_fit9, cmd_group_add, cmd_is_flex, cmd_pascal,
    cmd_plot, cmd_random, cmd_tangent, cmd_tangent_third, cmd_third_point, run, Artifact, Command,
    Options, Response,
};
pub use report::{Report, Source, Value};
pub use scene::Scene;
