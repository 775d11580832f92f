mod cli;
mod render;
mod report;
mod scene;

pub use cli::{load_scene, run_cli};
pub use render::{render_svg, RenderError, RenderOptions};
pub use report::{Format, Outcome, Record, Report};
pub use scene::{parse_expr, parse_scene, Decl, DiscDecl, ParseError, RadiusValue, Scene};
