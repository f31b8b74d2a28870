#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include "eimq/eim.hpp"

namespace eimq::io {

inline constexpr int kFormatVersion = 1;

/// On-disk model: the trained artifact plus the stop reason and an echo of
/// the run configuration (free-form key/value strings).
template <EimScalar Scalar>
struct ModelFile {
    MagicModel<Scalar> model;
    StopReason stop_reason = StopReason::MaxTermsReached;
    std::map<std::string, std::string> config_echo;
};

using AnyModelFile = std::variant<ModelFile<double>, ModelFile<std::complex<double>>>;

/// Serializes to the versioned JSON format: doubles are written in shortest
/// round-trip form (bit-exact reload), complex values as [re, im] pairs, and
/// an FNV-1a checksum guards the payload.
template <EimScalar Scalar>
std::string serialize(const ModelFile<Scalar>& file);

template <EimScalar Scalar>
void save(const std::filesystem::path& path, const ModelFile<Scalar>& file);

/// Throws MalformedFieldError / UnsupportedVersionError / ChecksumMismatchError.
AnyModelFile deserialize(const std::string& content);

AnyModelFile load(const std::filesystem::path& path);

} // namespace eimq::io
