//! Game files, payoff tables and the commands of the `gamesym` tool.
//!
//! The algebra lives in `gamesym-core`; this crate adds what needs `std`: reading and writing
//! `.game.json` documents ([`io`]), rendering payoff tables ([`render`]) and the command-line
//! front end ([`cli`]).

pub mod cli;
pub mod io;
pub mod render;
