pub mod profile_grid;
