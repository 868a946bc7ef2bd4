//! Adapters mapping games and graph problems onto partition instances.

mod color;
mod digraph;
mod game;
mod mad;

pub use color::{
    two_color_difference, two_color_difference_instance, two_color_partition,
    two_color_partition_instance,
};
pub use digraph::{
    balance_defect, balance_instance, dicut_instance, excess_sum, max_weighted_dicut,
    min_st_cut_via_mwdp, st_cut_instance,
};
pub use game::{game_to_mwsdp, max_welfare, Action, PolymatrixGame, StrategyProfile, Welfare};
pub use mad::{density, inner_edges, mad_decide, mad_exact, mad_instance};
