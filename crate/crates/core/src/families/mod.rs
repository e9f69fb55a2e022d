//! Closed forms for the tunnels of 2-bridge knots and torus knots, and the
//! toroidal-position test.

mod toroidal;
mod torus;
mod two_bridge;

pub use toroidal::{is_toroidal, toroidal_braid_word};
pub use torus::{staircase, torus_braid_word, torus_lower_slopes, torus_upper_slopes, TorusParams};
pub use two_bridge::{
    find_two_bridge, lower_simple_word, semisimple_slopes_closed_form, two_bridge_tunnels,
    upper_semisimple_word, Rejection, TwoBridge, TwoBridgeMatch, TwoBridgeReport,
};
