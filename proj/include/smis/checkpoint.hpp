#pragma once

#include "smis/nn.hpp"

#include <map>
#include <string>
#include <vector>

namespace smis {

// In-memory image of a checkpoint file: tensor records in file order plus
// raw-byte metadata records (JSON strings by convention). The byte layout is
// documented in docs/checkpoint_format.md.
struct Checkpoint {
    std::vector<Parameter> tensors;  // trainable flag is not stored on disk
    std::map<std::string, std::string> meta;

    bool has_tensor(const std::string& name) const;
    const Tensor& tensor(const std::string& name) const;  // DataError if absent
    bool has_meta(const std::string& name) const;
    const std::string& meta_record(const std::string& name) const;  // DataError if absent
};

// Writes atomically (temp file + rename). Tensor records are written in the
// order given, followed by meta records in map order.
void save_checkpoint(const std::string& path, const Checkpoint& ck);

Checkpoint load_checkpoint(const std::string& path);

// Copies checkpoint tensors into the module's registered state by name
// (state name = prefix + entry name). Every module entry must be present
// with matching shape and dtype; extra checkpoint records are ignored.
void load_module_state(Module& module, const Checkpoint& ck, const std::string& prefix = "");

}  // namespace smis
