#include "debruijn/dyadic.hpp"

namespace debruijn {

// The embedded q=16 seed: ten fibres over [16] and the 16x16 label matrix
// selecting one fibre per (a,b) cell. An independently re-entered copy ships
// as data/seed16.txt; the loader round-trip and two count goldens guard this
// table against transcription damage.
SeedTable embedded_seed_table() {
    SeedTable t;
    t.fibres = {{
        {},                                                        // A
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},   // B
        {6, 7},                                                    // C
        {2, 3, 6, 7},                                              // D
        {2, 3, 6, 7, 12, 13},                                      // E
        {2, 3, 6, 7, 8, 9, 12, 13},                                // F
        {2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 14, 15},                  // G
        {2, 3, 6, 7, 8, 9, 12, 13, 14, 15},                        // H
        {2, 3, 6, 7, 9, 12, 13},                                   // I
        {2, 3, 6, 7, 8, 9, 12, 13, 14},                            // J
    }};
    static constexpr const char* rows[16] = {
        "GGAAAAAAAAGGAAAA",
        "GGAAAAAAAAGGAAAA",
        "BBFFBBAAFFBBFFBB",
        "BBFFBBAAFFBBFFBB",
        "GGCCHHAADDGGDDDD",
        "GGCCHHAADDGGDDDD",
        "BBFFBBFFFFBBFFBB",
        "BBFFBBFFFFBBFFBB",
        "BBCCBBAAFEBBDDBB",
        "BBCCBBAAFFBBDDBB",
        "GGAAAAAAAAGGAAAA",
        "GGAAAAAAAAGGAAAA",
        "BBCCBBAAFFBBFFBB",
        "BBCCBBAAFFBBFFBB",
        "GGCCHHAAIEGGDDFJ",
        "GGCCHHAAEEGGDDEJ",
    };
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) t.labels[a][b] = rows[a][b];
    return t;
}

}  // namespace debruijn
