#pragma once

#include <string>
#include <vector>

#include "cchol/channel.hpp"
#include "cchol/cholesky.hpp"
#include "cchol/dilation.hpp"

namespace cchol {

enum class Representation { entries, kraus };

/// On-disk channel description. For "entries" the payload is the N x N
/// family of d x d matrices C_{i,j}; for "kraus" a list of d x N operators.
/// Complex scalars are encoded as [re, im] pairs, matrices as row-major
/// nested arrays. The parsed ChannelSpec is populated for both forms.
struct ChannelFile {
    std::string format_version = "1";
    Index dim_in = 0;
    Index dim_out = 0;
    Representation representation = Representation::entries;
    std::vector<ComplexMatrix> kraus; ///< populated iff representation == kraus
    ChannelSpec channel;
};

ChannelFile make_entries_file(const ChannelSpec& ch);
ChannelFile make_kraus_file(const std::vector<ComplexMatrix>& kraus);

/// Throws IoError if the path is unreadable, ParseError on malformed JSON or
/// schema violations, DimensionError when declared dimensions and array
/// shapes disagree.
ChannelFile read_channel_file(const std::string& path);

void write_channel_file(const std::string& path, const ChannelFile& file);

/// Factor blocks L, D, L_hat in the channel-file matrix encoding.
void write_factors_file(const std::string& path, const CholeskyFactors& f);

/// Dilation matrix V, plus the Halmos unitary U when provided.
void write_dilation_file(const std::string& path, const DilationOperator& dil,
                         const HalmosUnitary* unitary = nullptr);

} // namespace cchol
