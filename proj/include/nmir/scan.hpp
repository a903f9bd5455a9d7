#pragma once

#include <cstdint>
#include <vector>

#include "nmir/errors.hpp"

namespace nmir {

// Geometry of the rendered brain-state image and its generation order:
// pixels row-major from the top-left corner, channels R,G,B within a pixel.
struct ScanConfig {
    int height = 8;
    int width = 8;
    int channels = 3;
    int levels = 8;  // K discrete intensity levels

    int n_cells() const { return height * width * channels; }
    bool operator==(const ScanConfig& o) const {
        return height == o.height && width == o.width && channels == o.channels &&
               levels == o.levels;
    }

    void validate() const {
        if (height < 1 || width < 1 || channels < 1)
            throw ConfigError("ScanConfig: dimensions must be positive");
        if (levels < 2) throw ConfigError("ScanConfig: need at least 2 intensity levels");
    }
};

// H x W x C grid of discrete intensity levels in [0, K). Cell layout is
// (row, col, channel) row-major.
struct BrainScan {
    ScanConfig config;
    std::vector<std::uint8_t> cells;

    BrainScan() = default;
    explicit BrainScan(const ScanConfig& cfg)
        : config(cfg), cells(static_cast<std::size_t>(cfg.n_cells()), 0) {}

    std::uint8_t& at(int r, int c, int ch) {
        return cells[(static_cast<std::size_t>(r) * config.width + c) * config.channels + ch];
    }
    std::uint8_t at(int r, int c, int ch) const {
        return cells[(static_cast<std::size_t>(r) * config.width + c) * config.channels + ch];
    }

    bool operator==(const BrainScan& o) const {
        return config == o.config && cells == o.cells;
    }
};

}  // namespace nmir
