"""Array codes built from a GRS row code and inner column transforms, with decoders for mixed block and symbol errors and erasures."""
