//! Graph products of cyclic vertex groups (placeholder while under construction).
