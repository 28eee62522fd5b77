pub mod check;
pub mod commands;
pub mod delaunay;
pub mod gen;
pub mod geometry;
pub mod io;
pub mod proximity;
pub mod regions;
pub mod render;
pub mod voronoi;
