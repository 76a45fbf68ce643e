#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace frtok {

using TokenId = std::int32_t;

// id <-> token bijection with a fixed special-token inventory at the front
// and reserved placeholder tokens at the back. Ids are contiguous from 0 in
// file order (vocab.txt convention: line number == id).
class Vocabulary {
  public:
    static constexpr const char* kPad = "[PAD]";
    static constexpr const char* kUnk = "[UNK]";
    static constexpr const char* kCls = "[CLS]";
    static constexpr const char* kSep = "[SEP]";
    static constexpr const char* kMask = "[MASK]";
    static constexpr const char* kNewline = "[NL]";
    static constexpr const char* kTab = "[TAB]";
    static constexpr const char* kContinuation = "##";

    static std::vector<std::string> special_tokens();

    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> tokens,
                        std::size_t reserved_count = 0);

    std::size_t size() const { return tokens_.size(); }
    std::size_t reserved_count() const { return reserved_count_; }

    std::optional<TokenId> id_of(std::string_view token) const;
    const std::string& token(TokenId id) const;  // throws UnknownId

    TokenId pad_id() const { return pad_; }
    TokenId unk_id() const { return unk_; }
    TokenId cls_id() const { return cls_; }
    TokenId sep_id() const { return sep_; }
    TokenId mask_id() const { return mask_; }
    TokenId newline_id() const { return newline_; }
    TokenId tab_id() const { return tab_; }

    // The seven inventory specials.
    bool is_special(TokenId id) const;
    bool is_reserved(TokenId id) const {
        return id >= 0 && static_cast<std::size_t>(id) >=
                              tokens_.size() - reserved_count_;
    }
    bool is_continuation(TokenId id) const;

    // FNV-1a digest over the token list; identifies a vocab in manifests.
    std::uint64_t content_hash() const;

    void save(const std::filesystem::path& path) const;
    static Vocabulary load(const std::filesystem::path& path);

  private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };

    void index_specials();

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId, StringHash, std::equal_to<>>
        index_;
    std::size_t reserved_count_ = 0;
    TokenId pad_ = -1, unk_ = -1, cls_ = -1, sep_ = -1, mask_ = -1,
            newline_ = -1, tab_ = -1;
};

}  // namespace frtok
