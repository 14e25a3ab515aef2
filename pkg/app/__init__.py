# Homopolymer-constrained DNA coders and the JPEG-DNA image codec
