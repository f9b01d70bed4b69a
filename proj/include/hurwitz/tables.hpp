#pragma once
// Matrices as printed, transcribed from the source tables. Entries use the
// parse_zeta_expr notation; symbolic entries (c2, q5, 13 r1, rinf) are resolved by the caller.

#include <string>
#include <vector>

namespace hurwitz::tables {

enum class Scale { one, minus_inv_sqrt13, inv_sqrt13, minus_inv_13sqrt13 };

struct PrintedMatrix {
    std::string name;
    std::string ref;
    Scale scale;
    std::vector<std::vector<std::string>> rows;
};

inline const std::vector<PrintedMatrix>& printed_matrices() {
    static const std::vector<PrintedMatrix> all = {
        {"S", "generator S, opening list", Scale::minus_inv_sqrt13, {
            {"z^12-z", "z^10-z^3", "z^4-z^9", "z^5-z^8", "z^2-z^11", "z^6-z^7"},
            {"z^10-z^3", "z^4-z^9", "z^12-z", "z^2-z^11", "z^6-z^7", "z^5-z^8"},
            {"z^4-z^9", "z^12-z", "z^10-z^3", "z^6-z^7", "z^5-z^8", "z^2-z^11"},
            {"z^5-z^8", "z^2-z^11", "z^6-z^7", "z-z^12", "z^3-z^10", "z^9-z^4"},
            {"z^2-z^11", "z^6-z^7", "z^5-z^8", "z^3-z^10", "z^9-z^4", "z-z^12"},
            {"z^6-z^7", "z^5-z^8", "z^2-z^11", "z^9-z^4", "z-z^12", "z^3-z^10"},
        }},
        {"T", "generator T, opening list", Scale::one, {
            {"z^7", "0", "0", "0", "0", "0"},
            {"0", "z^11", "0", "0", "0", "0"},
            {"0", "0", "z^8", "0", "0", "0"},
            {"0", "0", "0", "z^6", "0", "0"},
            {"0", "0", "0", "0", "z^2", "0"},
            {"0", "0", "0", "0", "0", "z^5"},
        }},
        {"x1", "x1, opening list", Scale::minus_inv_sqrt13, {
            {"z^9-z^12", "z^11-z^7", "z^8-z^9", "z^7-z^5", "z^4-z^11", "z^4-z^12"},
            {"z^7-z^3", "z^3-z^4", "z^8-z^11", "z^10-z^4", "z^11-z^6", "z^10-z^8"},
            {"z^7-z^8", "z^11-z", "z-z^10", "z^12-z^7", "z^12-z^10", "z^8-z^2"},
            {"z^8-z^6", "z^2-z^9", "z-z^9", "z^4-z", "z^2-z^6", "z^5-z^4"},
            {"z^9-z^3", "z^7-z^2", "z^5-z^3", "z^6-z^10", "z^10-z^9", "z^5-z^2"},
            {"z^6-z", "z^3-z", "z^11-z^5", "z^6-z^5", "z^2-z^12", "z^12-z^3"},
        }},
        {"y1", "y1, opening list", Scale::one, {
            {"0", "0", "0", "-z", "0", "0"},
            {"0", "0", "0", "0", "-z^9", "0"},
            {"0", "0", "0", "0", "0", "-z^3"},
            {"z^12", "0", "0", "0", "0", "0"},
            {"0", "z^4", "0", "0", "0", "0"},
            {"0", "0", "z^10", "0", "0", "0"},
        }},
        {"x2", "x2, opening list", Scale::minus_inv_sqrt13, {
            {"z^9-z^10", "z^5-z^8", "z-z^10", "z^3-z^11", "z^11-z^9", "z-z^8"},
            {"z^9-z^12", "z^3-z^12", "z^6-z^7", "z^9-z^7", "z-z^8", "z^8-z^3"},
            {"z^2-z^11", "z^3-z^4", "z-z^4", "z^7-z", "z^3-z^11", "z^9-z^7"},
            {"z^2-z^10", "z^4-z^2", "z^5-z^12", "z^4-z^3", "z^8-z^5", "z^12-z^3"},
            {"z^6-z^4", "z^5-z^12", "z^10-z^5", "z^4-z", "z^10-z", "z^7-z^6"},
            {"z^12-z^6", "z^2-z^10", "z^6-z^4", "z^11-z^2", "z^10-z^9", "z^12-z^9"},
        }},
        {"y2", "y2, opening list", Scale::minus_inv_sqrt13, {
            {"z^7-z^6", "z^8-z^5", "z^11-z^2", "z^4-z^9", "z^12-z", "z^10-z^3"},
            {"z^8-z^5", "z^11-z^2", "z^7-z^6", "z^12-z", "z^10-z^3", "z^4-z^9"},
            {"z^11-z^2", "z^7-z^6", "z^8-z^5", "z^10-z^3", "z^4-z^9", "z^12-z"},
            {"z^4-z^9", "z^12-z", "z^10-z^3", "z^6-z^7", "z^5-z^8", "z^2-z^11"},
            {"z^12-z", "z^10-z^3", "z^4-z^9", "z^5-z^8", "z^2-z^11", "z^6-z^7"},
            {"z^10-z^3", "z^4-z^9", "z^12-z", "z^2-z^11", "z^6-z^7", "z^5-z^8"},
        }},
        {"x3", "x3, opening list", Scale::minus_inv_sqrt13, {
            {"z^12-z^3", "z^6-z^5", "z^2-z^12", "z^5-z^11", "z-z^6", "z-z^3"},
            {"z^5-z^4", "z^4-z", "z^2-z^6", "z^9-z", "z^6-z^8", "z^9-z^2"},
            {"z^5-z^2", "z^6-z^10", "z^10-z^9", "z^3-z^5", "z^3-z^9", "z^2-z^7"},
            {"z^2-z^8", "z^7-z^12", "z^10-z^12", "z-z^10", "z^7-z^8", "z^11-z"},
            {"z^12-z^4", "z^5-z^7", "z^11-z^4", "z^8-z^9", "z^9-z^12", "z^11-z^7"},
            {"z^8-z^10", "z^4-z^10", "z^6-z^11", "z^8-z^11", "z^7-z^3", "z^3-z^4"},
        }},
        {"y3", "y3, opening list", Scale::minus_inv_sqrt13, {
            {"z^8-z^5", "z^4-z^8", "z^2-z", "z^4-z^6", "z^9-z^2", "z-z^6"},
            {"z^5-z^9", "z^7-z^6", "z^10-z^7", "z^9-z^2", "z^10-z^2", "z^3-z^5"},
            {"z^12-z^11", "z^6-z^3", "z^11-z^2", "z-z^6", "z^3-z^5", "z^12-z^5"},
            {"z^7-z^9", "z^11-z^4", "z^7-z^12", "z^5-z^8", "z^9-z^5", "z^11-z^12"},
            {"z^11-z^4", "z^11-z^3", "z^8-z^10", "z^8-z^4", "z^6-z^7", "z^3-z^6"},
            {"z^7-z^12", "z^8-z^10", "z^8-z", "z-z^2", "z^7-z^10", "z^2-z^11"},
        }},
        {"Q", "Q, opening list", Scale::minus_inv_sqrt13, {
            {"z^7-z^9", "z^4-z^10", "z^2-z^7", "z^10-1", "z^8-z^4", "z^8-z^9"},
            {"z^5-z^11", "z^11-z^3", "z^10-z^12", "z^7-z^3", "z^12-1", "z^7-z^10"},
            {"z^12-z^4", "z^6-z^8", "z^8-z", "z^11-z^12", "z^11-z", "z^4-1"},
            {"1-z^3", "z^9-z^5", "z^4-z^5", "z^6-z^4", "z^9-z^3", "z^11-z^6"},
            {"z^10-z^6", "1-z", "z^3-z^6", "z^8-z^2", "z^2-z^10", "z^3-z"},
            {"z-z^2", "z^12-z^2", "1-z^9", "z-z^9", "z^7-z^5", "z^5-z^12"},
        }},
        {"M3", "3x3 block M of S", Scale::one, {
            {"z-z^12", "z^3-z^10", "z^9-z^4"},
            {"z^3-z^10", "z^9-z^4", "z-z^12"},
            {"z^9-z^4", "z-z^12", "z^3-z^10"},
        }},
        {"N3", "3x3 block N of S", Scale::one, {
            {"z^5-z^8", "z^2-z^11", "z^6-z^7"},
            {"z^2-z^11", "z^6-z^7", "z^5-z^8"},
            {"z^6-z^7", "z^5-z^8", "z^2-z^11"},
        }},
        {"ST", "ST in the order-1092 proof", Scale::minus_inv_sqrt13, {
            {"z^6-z^8", "z^8-z", "z^12-z^4", "z^11-z", "z^4-1", "z^11-z^12"},
            {"z^4-z^10", "z^2-z^7", "z^7-z^9", "z^8-z^4", "z^8-z^9", "z^10-1"},
            {"z^11-z^3", "z^10-z^12", "z^5-z^11", "z^12-1", "z^7-z^10", "z^7-z^3"},
            {"z^12-z^2", "1-z^9", "z-z^2", "z^7-z^5", "z^5-z^12", "z-z^9"},
            {"z^9-z^5", "z^4-z^5", "1-z^3", "z^9-z^3", "z^11-z^6", "z^6-z^4"},
            {"1-z", "z^3-z^6", "z^10-z^6", "z^2-z^10", "z^3-z", "z^8-z^2"},
        }},
        {"ST_inv", "(ST)^-1 = T^-1 S in the order-1092 proof", Scale::minus_inv_sqrt13, {
            {"z^5-z^7", "z^3-z^9", "z^10-z^2", "z^11-z", "z^8-z^4", "z^12-1"},
            {"z^12-z^5", "z^6-z^11", "z-z^3", "z^4-1", "z^8-z^9", "z^7-z^10"},
            {"z^9-z", "z^4-z^6", "z^2-z^8", "z^11-z^12", "z^10-1", "z^7-z^3"},
            {"z^12-z^2", "z^9-z^5", "1-z", "z^8-z^6", "z^10-z^4", "z^3-z^11"},
            {"1-z^9", "z^4-z^5", "z^3-z^6", "z-z^8", "z^7-z^2", "z^12-z^10"},
            {"z-z^2", "1-z^3", "z^10-z^6", "z^4-z^12", "z^9-z^7", "z^11-z^5"},
        }},
        {"Q.alt", "Q in the order-1092 proof", Scale::minus_inv_sqrt13, {
            {"z^7-z^9", "z^4-z^10", "z^2-z^7", "z^10-1", "z^8-z^4", "z^8-z^9"},
            {"z^5-z^11", "z^11-z^3", "z^10-z^12", "z^7-z^3", "z^12-1", "z^7-z^10"},
            {"z^12-z^4", "z^6-z^8", "z^8-z", "z^11-z^12", "z^11-z", "z^4-1"},
            {"1-z^3", "z^9-z^5", "z^4-z^5", "z^6-z^4", "z^9-z^3", "z^11-z^6"},
            {"z^10-z^6", "1-z", "z^3-z^6", "z^8-z^2", "z^2-z^10", "z^3-z"},
            {"z-z^2", "z^12-z^2", "1-z^9", "z-z^9", "z^7-z^5", "z^5-z^12"},
        }},
        {"Q2", "Q^2 table", Scale::minus_inv_sqrt13, {
            {"z^3-z^8", "1-z^2", "z^3-z^9", "z^11-z^12", "z^8-z^11", "1-z^9"},
            {"z-z^3", "z-z^7", "1-z^5", "1-z^3", "z^8-z^4", "z^7-z^8"},
            {"1-z^6", "z^9-z", "z^9-z^11", "z^11-z^7", "1-z", "z^7-z^10"},
            {"z-z^2", "z^2-z^5", "z^4-1", "z^10-z^5", "1-z^11", "z^10-z^4"},
            {"z^10-1", "z^9-z^5", "z^5-z^6", "z^12-z^10", "z^12-z^6", "1-z^8"},
            {"z^6-z^2", "z^12-1", "z^3-z^6", "1-z^7", "z^4-z^12", "z^4-z^2"},
        }},
        {"Q3", "Q^3 table", Scale::minus_inv_sqrt13, {
            {"z^11-z", "z^12-z^8", "1-z", "z^6-z^4", "z^4-z^11", "1-z^8"},
            {"1-z^9", "z^8-z^9", "z^4-z^7", "1-z^7", "z^2-z^10", "z^10-z^8"},
            {"z^10-z^11", "1-z^3", "z^7-z^3", "z^12-z^7", "1-z^11", "z^5-z^12"},
            {"z^9-z^7", "z^2-z^9", "z^5-1", "z^2-z^12", "z-z^5", "1-z^12"},
            {"z^6-1", "z^3-z^11", "z^5-z^3", "1-z^4", "z^5-z^4", "z^9-z^6"},
            {"z^6-z", "z^2-1", "z-z^8", "z^3-z^2", "1-z^10", "z^6-z^10"},
        }},
        {"Q4", "Q^4 table", Scale::minus_inv_sqrt13, {
            {"z^12-z^2", "z^4-1", "z^2-z^3", "z^6-z^4", "1-z^7", "z^12-z^7"},
            {"z^5-z", "z^4-z^5", "z^10-1", "z^4-z^11", "z^2-z^10", "1-z^11"},
            {"z^12-1", "z^6-z^9", "z^10-z^6", "1-z^8", "z^10-z^8", "z^5-z^12"},
            {"z^9-z^7", "z^6-1", "z^6-z", "z-z^11", "z^9-1", "z^11-z^10"},
            {"z^2-z^9", "z^3-z^11", "z^2-1", "z^8-z^12", "z^9-z^8", "z^3-1"},
            {"z^5-1", "z^5-z^3", "z-z^8", "z-1", "z^7-z^4", "z^3-z^7"},
        }},
        {"Q5", "Q^5 table", Scale::minus_inv_sqrt13, {
            {"z^5-z^10", "z^10-z^12", "z^7-1", "z^11-z^12", "1-z^3", "z^11-z^7"},
            {"z^11-1", "z^6-z^12", "z^12-z^4", "z^8-z^11", "z^8-z^4", "1-z"},
            {"z^4-z^10", "z^8-1", "z^2-z^4", "1-z^9", "z^7-z^8", "z^7-z^10"},
            {"z-z^2", "z^10-1", "z^6-z^2", "z^8-z^3", "z^3-z", "z^6-1"},
            {"z^2-z^5", "z^9-z^5", "z^12-1", "z^2-1", "z^7-z", "z-z^9"},
            {"z^4-1", "z^5-z^6", "z^3-z^6", "z^9-z^3", "z^5-1", "z^11-z^9"},
        }},
        {"Q6", "Q^6 table", Scale::minus_inv_sqrt13, {
            {"z^4-z^6", "z^2-z^8", "z^9-z", "z^10-1", "z^7-z^3", "z^11-z^12"},
            {"z^3-z^9", "z^10-z^2", "z^5-z^7", "z^8-z^4", "z^12-1", "z^11-z"},
            {"z^6-z^11", "z-z^3", "z^12-z^5", "z^8-z^9", "z^7-z^10", "z^4-1"},
            {"1-z^3", "z^10-z^6", "z-z^2", "z^9-z^7", "z^11-z^5", "z^4-z^12"},
            {"z^9-z^5", "1-z", "z^12-z^2", "z^10-z^4", "z^3-z^11", "z^8-z^6"},
            {"z^4-z^5", "z^3-z^6", "1-z^9", "z^7-z^2", "z^12-z^10", "z-z^8"},
        }},
        {"P4", "P^4 table", Scale::minus_inv_sqrt13, {
            {"z^7-1", "z^2-z^7", "z^6-z^8", "z^2-z^11", "z^5-z^6", "z^8-z^11"},
            {"z^2-z^7", "z^11-1", "z^5-z^11", "z^7-z^8", "z^5-z^8", "z^6-z^2"},
            {"z^6-z^8", "z^5-z^11", "z^8-1", "z^2-z^5", "z^11-z^7", "z^6-z^7"},
            {"z^2-z^11", "z^7-z^8", "z^2-z^5", "z^6-1", "z^11-z^6", "z^7-z^5"},
            {"z^5-z^6", "z^5-z^8", "z^11-z^7", "z^11-z^6", "z^2-1", "z^8-z^2"},
            {"z^8-z^11", "z^6-z^2", "z^6-z^7", "z^7-z^5", "z^8-z^2", "z^5-1"},
        }},
        {"Q3P4", "Q^3 P^4 table", Scale::minus_inv_sqrt13, {
            {"z^7-z^5", "z^2-z^9", "z^10-z^5", "z^6-z^3", "z^3-z^7", "z^10-z^9"},
            {"z^12-z^6", "z^11-z^6", "z^5-z^3", "z^12-z^3", "z^2-z", "z-z^11"},
            {"z^6-z", "z^4-z^2", "z^8-z^2", "z^9-z^8", "z^4-z", "z^5-z^9"},
            {"z^10-z^7", "z^6-z^10", "z^4-z^3", "z^6-z^8", "z^11-z^4", "z^3-z^8"},
            {"z^10-z", "z^12-z^11", "z^2-z^12", "z-z^7", "z^2-z^7", "z^8-z^10"},
            {"z^5-z^4", "z^12-z^9", "z^4-z^8", "z^7-z^12", "z^9-z^11", "z^5-z^11"},
        }},
        {"Q3P4_sq", "(Q^3 P^4)^2 table", Scale::minus_inv_sqrt13, {
            {"z^8-z^6", "z^7-z", "z^12-z^7", "z^6-z^3", "z^12-z^3", "z^9-z^8"},
            {"z^4-z^11", "z^7-z^2", "z^11-z^9", "z^3-z^7", "z^2-z", "z^4-z"},
            {"z^8-z^3", "z^10-z^8", "z^11-z^5", "z^10-z^9", "z-z^11", "z^5-z^9"},
            {"z^10-z^7", "z^10-z", "z^5-z^4", "z^5-z^7", "z^6-z^12", "z-z^6"},
            {"z^6-z^10", "z^12-z^11", "z^12-z^9", "z^9-z^2", "z^6-z^11", "z^2-z^4"},
            {"z^4-z^3", "z^2-z^12", "z^4-z^8", "z^5-z^10", "z^3-z^5", "z^2-z^8"},
        }},
        {"P2", "P^2 table", Scale::minus_inv_sqrt13, {
            {"1-z", "z-z^4", "z^3-z^12", "z^9-z^4", "z^12-z^10", "z^9-z^3"},
            {"z-z^4", "1-z^9", "z^9-z^10", "z^3-z", "z^3-z^10", "z^4-z^12"},
            {"z^3-z^12", "z^9-z^10", "1-z^3", "z^10-z^4", "z-z^9", "z-z^12"},
            {"z^9-z^4", "z^3-z", "z^10-z^4", "1-z^12", "z^12-z^9", "z^10-z"},
            {"z^12-z^10", "z^3-z^10", "z-z^9", "z^12-z^9", "1-z^4", "z^4-z^3"},
            {"z^9-z^3", "z^4-z^12", "z-z^12", "z^10-z", "z^4-z^3", "1-z^10"},
        }},
        {"QP2", "Q P^2 table (x3 in the permutation proof)", Scale::minus_inv_sqrt13, {
            {"z^12-z^3", "z^6-z^5", "z^2-z^12", "z^5-z^11", "z-z^6", "z-z^3"},
            {"z^5-z^4", "z^4-z", "z^2-z^6", "z^9-z", "z^6-z^8", "z^9-z^2"},
            {"z^5-z^2", "z^6-z^10", "z^10-z^9", "z^3-z^5", "z^3-z^9", "z^2-z^7"},
            {"z^2-z^8", "z^7-z^12", "z^10-z^12", "z-z^10", "z^7-z^8", "z^11-z"},
            {"z^12-z^4", "z^5-z^7", "z^11-z^4", "z^8-z^9", "z^9-z^12", "z^11-z^7"},
            {"z^8-z^10", "z^4-z^10", "z^6-z^11", "z^8-z^11", "z^7-z^3", "z^3-z^4"},
        }},
        {"QP2_sq", "(Q P^2)^2 table", Scale::minus_inv_sqrt13, {
            {"z-z^10", "z^8-z^9", "z^8-z^11", "z^11-z^5", "z-z^9", "z^5-z^3"},
            {"z^7-z^8", "z^9-z^12", "z^7-z^3", "z^6-z", "z^8-z^6", "z^9-z^3"},
            {"z^11-z", "z^11-z^7", "z^3-z^4", "z^3-z", "z^2-z^9", "z^7-z^2"},
            {"z^8-z^2", "z^4-z^12", "z^10-z^8", "z^12-z^3", "z^5-z^4", "z^5-z^2"},
            {"z^12-z^7", "z^7-z^5", "z^10-z^4", "z^6-z^5", "z^4-z", "z^6-z^10"},
            {"z^12-z^10", "z^4-z^11", "z^11-z^6", "z^2-z^12", "z^2-z^6", "z^10-z^9"},
        }},
        {"Q5P2", "Q^5 P^2 table (y3 in the permutation proof)", Scale::minus_inv_sqrt13, {
            {"z^8-z^5", "z^4-z^8", "z^2-z", "z^4-z^6", "z^9-z^2", "z-z^6"},
            {"z^5-z^9", "z^7-z^6", "z^10-z^7", "z^9-z^2", "z^10-z^2", "z^3-z^5"},
            {"z^12-z^11", "z^6-z^3", "z^11-z^2", "z-z^6", "z^3-z^5", "z^12-z^5"},
            {"z^7-z^9", "z^11-z^4", "z^7-z^12", "z^5-z^8", "z^9-z^5", "z^11-z^12"},
            {"z^11-z^4", "z^11-z^3", "z^8-z^10", "z^8-z^4", "z^6-z^7", "z^3-z^6"},
            {"z^7-z^12", "z^8-z^10", "z^8-z", "z-z^2", "z^7-z^10", "z^2-z^11"},
        }},
        {"PQ2P10", "P Q^2 P^10 table (y1 in the permutation proof)", Scale::one, {
            {"0", "0", "0", "-z", "0", "0"},
            {"0", "0", "0", "0", "-z^9", "0"},
            {"0", "0", "0", "0", "0", "-z^3"},
            {"z^12", "0", "0", "0", "0", "0"},
            {"0", "z^4", "0", "0", "0", "0"},
            {"0", "0", "z^10", "0", "0", "0"},
        }},
        {"Q6PQ2P10", "Q^6 P Q^2 P^10 table (x1 in the permutation proof)", Scale::minus_inv_sqrt13, {
            {"z^9-z^12", "z^11-z^7", "z^8-z^9", "z^7-z^5", "z^4-z^11", "z^4-z^12"},
            {"z^7-z^3", "z^3-z^4", "z^8-z^11", "z^10-z^4", "z^11-z^6", "z^10-z^8"},
            {"z^7-z^8", "z^11-z", "z-z^10", "z^12-z^7", "z^12-z^10", "z^8-z^2"},
            {"z^8-z^6", "z^2-z^9", "z-z^9", "z^4-z", "z^2-z^6", "z^5-z^4"},
            {"z^9-z^3", "z^7-z^2", "z^5-z^3", "z^6-z^10", "z^10-z^9", "z^5-z^2"},
            {"z^6-z", "z^3-z", "z^11-z^5", "z^6-z^5", "z^2-z^12", "z^12-z^3"},
        }},
        {"P2Q6P8", "P^2 Q^6 P^8 table", Scale::minus_inv_sqrt13, {
            {"z^8-z^5", "z^12-z^3", "z^4-z^3", "z^2-z^4", "z^12-z^5", "z^10-z^2"},
            {"z^10-z", "z^7-z^6", "z^4-z", "z^12-z^5", "z^5-z^10", "z^4-z^6"},
            {"z^10-z^9", "z^12-z^9", "z^11-z^2", "z^10-z^2", "z^4-z^6", "z^6-z^12"},
            {"z^9-z^11", "z^8-z", "z^11-z^3", "z^5-z^8", "z-z^10", "z^9-z^10"},
            {"z^8-z", "z^3-z^8", "z^7-z^9", "z^3-z^12", "z^6-z^7", "z^9-z^12"},
            {"z^11-z^3", "z^7-z^9", "z-z^7", "z^3-z^4", "z-z^4", "z^2-z^11"},
        }},
        {"y2.alt", "y2 as a product in the permutation proof", Scale::minus_inv_sqrt13, {
            {"z^7-z^6", "z^8-z^5", "z^11-z^2", "z^4-z^9", "z^12-z", "z^10-z^3"},
            {"z^8-z^5", "z^11-z^2", "z^7-z^6", "z^12-z", "z^10-z^3", "z^4-z^9"},
            {"z^11-z^2", "z^7-z^6", "z^8-z^5", "z^10-z^3", "z^4-z^9", "z^12-z"},
            {"z^4-z^9", "z^12-z", "z^10-z^3", "z^6-z^7", "z^5-z^8", "z^2-z^11"},
            {"z^12-z", "z^10-z^3", "z^4-z^9", "z^5-z^8", "z^2-z^11", "z^6-z^7"},
            {"z^10-z^3", "z^4-z^9", "z^12-z", "z^2-z^11", "z^6-z^7", "z^5-z^8"},
        }},
        {"x2.alt", "x2 as a product in the permutation proof", Scale::minus_inv_sqrt13, {
            {"z^9-z^10", "z^5-z^8", "z-z^10", "z^3-z^11", "z^11-z^9", "z-z^8"},
            {"z^9-z^12", "z^3-z^12", "z^6-z^7", "z^9-z^7", "z-z^8", "z^8-z^3"},
            {"z^2-z^11", "z^3-z^4", "z-z^4", "z^7-z", "z^3-z^11", "z^9-z^7"},
            {"z^2-z^10", "z^4-z^2", "z^5-z^12", "z^4-z^3", "z^8-z^5", "z^12-z^3"},
            {"z^6-z^4", "z^5-z^12", "z^10-z^5", "z^4-z", "z^10-z", "z^7-z^6"},
            {"z^12-z^6", "z^2-z^10", "z^6-z^4", "z^11-z^2", "z^10-z^9", "z^12-z^9"},
        }},
        {"S_tilde", "induced S on the seven quadrics", Scale::inv_sqrt13, {
            {"1", "1", "1", "1", "1", "1", "1"},
            {"2", "z^2+z^11", "z^9+z^4", "z^6+z^7", "z^5+z^8", "z^3+z^10", "z+z^12"},
            {"2", "z^9+z^4", "z^5+z^8", "z+z^12", "z^3+z^10", "z^6+z^7", "z^2+z^11"},
            {"2", "z^6+z^7", "z+z^12", "z^5+z^8", "z^2+z^11", "z^9+z^4", "z^3+z^10"},
            {"2", "z^5+z^8", "z^3+z^10", "z^2+z^11", "z^6+z^7", "z+z^12", "z^9+z^4"},
            {"2", "z^3+z^10", "z^6+z^7", "z^9+z^4", "z+z^12", "z^2+z^11", "z^5+z^8"},
            {"2", "z+z^12", "z^2+z^11", "z^3+z^10", "z^9+z^4", "z^5+z^8", "z^6+z^7"},
        }},
        {"T_tilde", "induced T on the seven quadrics", Scale::one, {
            {"1", "0", "0", "0", "0", "0", "0"},
            {"0", "z", "0", "0", "0", "0", "0"},
            {"0", "0", "z^4", "0", "0", "0", "0"},
            {"0", "0", "0", "z^9", "0", "0", "0"},
            {"0", "0", "0", "0", "z^3", "0", "0"},
            {"0", "0", "0", "0", "0", "z^12", "0"},
            {"0", "0", "0", "0", "0", "0", "z^10"},
        }},
        {"S1", "triality conjugate S1", Scale::minus_inv_sqrt13, {
            {"z^4-z^9", "z^12-z", "z^10-z^3", "z^5-z^8", "z^2-z^11", "z^6-z^7"},
            {"z^12-z", "z^10-z^3", "z^4-z^9", "z^2-z^11", "z^6-z^7", "z^5-z^8"},
            {"z^10-z^3", "z^4-z^9", "z^12-z", "z^6-z^7", "z^5-z^8", "z^2-z^11"},
            {"z^5-z^8", "z^2-z^11", "z^6-z^7", "z^3-z^10", "z^9-z^4", "z-z^12"},
            {"z^2-z^11", "z^6-z^7", "z^5-z^8", "z^9-z^4", "z-z^12", "z^3-z^10"},
            {"z^6-z^7", "z^5-z^8", "z^2-z^11", "z-z^12", "z^3-z^10", "z^9-z^4"},
        }},
        {"S2", "triality conjugate S2", Scale::minus_inv_sqrt13, {
            {"z^10-z^3", "z^4-z^9", "z^12-z", "z^5-z^8", "z^2-z^11", "z^6-z^7"},
            {"z^4-z^9", "z^12-z", "z^10-z^3", "z^2-z^11", "z^6-z^7", "z^5-z^8"},
            {"z^12-z", "z^10-z^3", "z^4-z^9", "z^6-z^7", "z^5-z^8", "z^2-z^11"},
            {"z^5-z^8", "z^2-z^11", "z^6-z^7", "z^9-z^4", "z-z^12", "z^3-z^10"},
            {"z^2-z^11", "z^6-z^7", "z^5-z^8", "z-z^12", "z^3-z^10", "z^9-z^4"},
            {"z^6-z^7", "z^5-z^8", "z^2-z^11", "z^3-z^10", "z^9-z^4", "z-z^12"},
        }},
        {"R", "triality permutation R", Scale::one, {
            {"0", "0", "1", "0", "0", "0"},
            {"1", "0", "0", "0", "0", "0"},
            {"0", "1", "0", "0", "0", "0"},
            {"0", "0", "0", "0", "1", "0"},
            {"0", "0", "0", "0", "0", "1"},
            {"0", "0", "0", "1", "0", "0"},
        }},
        {"H", "H = y2 S", Scale::one, {
            {"0", "0", "0", "0", "0", "1"},
            {"0", "0", "0", "1", "0", "0"},
            {"0", "0", "0", "0", "1", "0"},
            {"0", "0", "-1", "0", "0", "0"},
            {"-1", "0", "0", "0", "0", "0"},
            {"0", "-1", "0", "0", "0", "0"},
        }},
        {"H2", "H^2 table", Scale::one, {
            {"0", "-1", "0", "0", "0", "0"},
            {"0", "0", "-1", "0", "0", "0"},
            {"-1", "0", "0", "0", "0", "0"},
            {"0", "0", "0", "0", "-1", "0"},
            {"0", "0", "0", "0", "0", "-1"},
            {"0", "0", "0", "-1", "0", "0"},
        }},
        {"H3", "H^3 table", Scale::one, {
            {"0", "0", "0", "-1", "0", "0"},
            {"0", "0", "0", "0", "-1", "0"},
            {"0", "0", "0", "0", "0", "-1"},
            {"1", "0", "0", "0", "0", "0"},
            {"0", "1", "0", "0", "0", "0"},
            {"0", "0", "1", "0", "0", "0"},
        }},
        {"y3Q", "y3 Q table", Scale::minus_inv_sqrt13, {
            {"z^3-z^5", "z^6-z^12", "z^6-z^11", "z^11-z", "z^3-z^12", "z-z^2"},
            {"z^2-z^8", "z-z^6", "z^2-z^4", "z^9-z^5", "z^8-z^9", "z-z^4"},
            {"z^5-z^10", "z^5-z^7", "z^9-z^2", "z^9-z^10", "z^3-z^6", "z^7-z^3"},
            {"z^12-z^2", "z-z^10", "z^11-z^12", "z^10-z^8", "z^7-z", "z^7-z^2"},
            {"z^8-z^4", "z^4-z^5", "z^9-z^12", "z^11-z^5", "z^12-z^7", "z^11-z^9"},
            {"z^3-z^4", "z^7-z^10", "z^10-z^6", "z^8-z^3", "z^8-z^6", "z^4-z^11"},
        }},
        {"y3Q2", "y3 Q^2 table", Scale::minus_inv_sqrt13, {
            {"1-z", "1-z^3", "z^6-z^2", "z^6-z", "z^10-z^8", "z^3-z^10"},
            {"z^2-z^5", "1-z^9", "1-z", "z-z^12", "z^2-z^9", "z^12-z^7"},
            {"1-z^9", "z^5-z^6", "1-z^3", "z^4-z^11", "z^9-z^4", "z^5-z^3"},
            {"z^12-z^7", "z^5-z^3", "z^3-z^10", "1-z^12", "1-z^10", "z^7-z^11"},
            {"z-z^12", "z^4-z^11", "z^6-z", "z^11-z^8", "1-z^4", "1-z^12"},
            {"z^2-z^9", "z^9-z^4", "z^10-z^8", "1-z^4", "z^8-z^7", "1-z^10"},
        }},
        {"y3Q3", "y3 Q^3 table", Scale::minus_inv_sqrt13, {
            {"z^12-z^3", "z^4-z^3", "z^8-z^5", "z^12-z^5", "z^10-z^2", "z^2-z^4"},
            {"z^7-z^6", "z^4-z", "z^10-z", "z^5-z^10", "z^4-z^6", "z^12-z^5"},
            {"z^12-z^9", "z^11-z^2", "z^10-z^9", "z^4-z^6", "z^6-z^12", "z^10-z^2"},
            {"z^8-z", "z^11-z^3", "z^9-z^11", "z-z^10", "z^9-z^10", "z^5-z^8"},
            {"z^3-z^8", "z^7-z^9", "z^8-z", "z^6-z^7", "z^9-z^12", "z^3-z^12"},
            {"z^7-z^9", "z-z^7", "z^11-z^3", "z-z^4", "z^2-z^11", "z^3-z^4"},
        }},
        {"y3Q4", "y3 Q^4 table", Scale::minus_inv_sqrt13, {
            {"z-z^10", "z^8-z^9", "z^8-z^11", "z^11-z^5", "z-z^9", "z^5-z^3"},
            {"z^7-z^8", "z^9-z^12", "z^7-z^3", "z^6-z", "z^8-z^6", "z^9-z^3"},
            {"z^11-z", "z^11-z^7", "z^3-z^4", "z^3-z", "z^2-z^9", "z^7-z^2"},
            {"z^8-z^2", "z^4-z^12", "z^10-z^8", "z^12-z^3", "z^5-z^4", "z^5-z^2"},
            {"z^12-z^7", "z^7-z^5", "z^10-z^4", "z^6-z^5", "z^4-z", "z^6-z^10"},
            {"z^12-z^10", "z^4-z^11", "z^11-z^6", "z^2-z^12", "z^2-z^6", "z^10-z^9"},
        }},
        {"y3Q5", "y3 Q^5 table", Scale::minus_inv_sqrt13, {
            {"1-z^12", "z^12-z^9", "z^10-z", "z^4-z^9", "z-z^3", "z^4-z^10"},
            {"z^12-z^9", "1-z^4", "z^4-z^3", "z^10-z^12", "z^10-z^3", "z^9-z"},
            {"z^10-z", "z^4-z^3", "1-z^10", "z^3-z^9", "z^12-z^4", "z^12-z"},
            {"z^4-z^9", "z^10-z^12", "z^3-z^9", "1-z", "z-z^4", "z^3-z^12"},
            {"z-z^3", "z^10-z^3", "z^12-z^4", "z-z^4", "1-z^9", "z^9-z^10"},
            {"z^4-z^10", "z^9-z", "z^12-z", "z^3-z^12", "z^9-z^10", "1-z^3"},
        }},
        {"y3Q6", "y3 Q^6 table", Scale::minus_inv_sqrt13, {
            {"z^10-z^8", "z^6-1", "z^10-z^5", "z^12-z^9", "z^8-z^12", "z^6-z^5"},
            {"z^12-z^6", "z^12-z^7", "z^2-1", "z^2-z^6", "z^4-z^3", "z^7-z^4"},
            {"z^5-1", "z^4-z^2", "z^4-z^11", "z^11-z^10", "z^5-z^2", "z^10-z"},
            {"z^4-z", "z-z^5", "z^8-z^7", "z^3-z^5", "z^7-1", "z^3-z^8"},
            {"z^7-z^11", "z^10-z^9", "z^9-z^6", "z-z^7", "z-z^6", "z^11-1"},
            {"z^3-z^2", "z^11-z^8", "z^12-z^3", "z^8-1", "z^9-z^11", "z^9-z^2"},
        }},
        {"PQP2", "P Q P^2 table (dihedral subgroup)", Scale::minus_inv_sqrt13, {
            {"z^8-z^5", "z^10-z", "z^10-z^9", "z^9-z^11", "z^8-z", "z^11-z^3"},
            {"z^12-z^3", "z^7-z^6", "z^12-z^9", "z^8-z", "z^3-z^8", "z^7-z^9"},
            {"z^4-z^3", "z^4-z", "z^11-z^2", "z^11-z^3", "z^7-z^9", "z-z^7"},
            {"z^2-z^4", "z^12-z^5", "z^10-z^2", "z^5-z^8", "z^3-z^12", "z^3-z^4"},
            {"z^12-z^5", "z^5-z^10", "z^4-z^6", "z-z^10", "z^6-z^7", "z-z^4"},
            {"z^10-z^2", "z^4-z^6", "z^6-z^12", "z^9-z^10", "z^9-z^12", "z^2-z^11"},
        }},
        {"S_hat_c", "modular-data S in c(j) notation", Scale::inv_sqrt13, {
            {"1", "1", "1", "1", "1", "1", "1"},
            {"2", "c1", "c2", "c3", "c4", "c5", "c6"},
            {"2", "c2", "c4", "c6", "c5", "c3", "c1"},
            {"2", "c3", "c6", "c4", "c1", "c2", "c5"},
            {"2", "c4", "c5", "c1", "c3", "c6", "c2"},
            {"2", "c5", "c3", "c2", "c6", "c1", "c4"},
            {"2", "c6", "c1", "c5", "c2", "c4", "c3"},
        }},
        {"Shat_B1", "14-dim S, upper left block", Scale::minus_inv_13sqrt13, {
            {"r0", "r1", "r2", "r1", "r3", "r2", "r2"},
            {"13 r1", "q1", "q2", "q3", "q4", "q5", "q6"},
            {"26 r2", "2 q2", "-q4", "2 q6", "2 q8", "-q10", "-q12"},
            {"13 r1", "q3", "q6", "q9", "q12", "q2", "q5"},
            {"13 r3", "q4", "q8", "q12", "-q3", "q7", "q11"},
            {"26 r2", "2 q5", "-q10", "2 q2", "2 q7", "-q12", "-q4"},
            {"26 r2", "2 q6", "-q12", "2 q5", "2 q11", "-q4", "-q10"},
        }},
        {"Shat_B2", "14-dim S, upper right block", Scale::minus_inv_13sqrt13, {
            {"r4", "r4", "r1", "r3", "r4", "r3", "rinf"},
            {"q7", "q8", "q9", "q10", "q11", "q12", "-13 r3"},
            {"q1", "q3", "2 q5", "2 q7", "q9", "2 q11", "-26 r4"},
            {"q8", "q11", "q1", "q4", "q7", "q10", "-13 r3"},
            {"-q2", "-q6", "q10", "-q1", "-q5", "-q9", "13 r1"},
            {"q9", "q1", "2 q6", "2 q11", "q3", "2 q8", "-26 r4"},
            {"q3", "q9", "2 q2", "2 q8", "q1", "2 q7", "-26 r4"},
        }},
        {"Shat_B3", "14-dim S, lower left block", Scale::minus_inv_13sqrt13, {
            {"26 r4", "2 q7", "q1", "2 q8", "-2 q2", "q9", "q3"},
            {"26 r4", "2 q8", "q3", "2 q11", "-2 q6", "q1", "q9"},
            {"13 r1", "q9", "q5", "q1", "q10", "q6", "q2"},
            {"13 r3", "q10", "q7", "q4", "-q1", "q11", "q8"},
            {"26 r4", "2 q11", "q9", "2 q7", "-2 q5", "q3", "q1"},
            {"13 r3", "q12", "q11", "q10", "-q9", "q8", "q7"},
            {"rinf", "-r3", "-r4", "-r3", "r1", "-r4", "-r4"},
        }},
        {"Shat_B4", "14-dim S, lower right block", Scale::minus_inv_13sqrt13, {
            {"q10", "q4", "2 q11", "-2 q5", "q12", "-2 q6", "26 r2"},
            {"q4", "q12", "2 q7", "-2 q2", "q10", "-2 q5", "26 r2"},
            {"q11", "q7", "q3", "q12", "q8", "q4", "-13 r3"},
            {"-q5", "-q2", "q12", "-q9", "-q6", "-q3", "13 r1"},
            {"q12", "q10", "2 q8", "-2 q6", "q4", "-2 q2", "26 r2"},
            {"-q6", "-q5", "q4", "-q3", "-q2", "-q1", "13 r1"},
            {"r2", "r2", "-r3", "r1", "r2", "r1", "-r0"},
        }},
    };
    return all;
}

}  // namespace hurwitz::tables
