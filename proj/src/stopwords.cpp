#include "scimap/attributes.hpp"

#include "text_util.hpp"

#include <string>

namespace scimap {

namespace {

// Version 1. Append-only; changing membership changes every word catalog.
constexpr std::string_view kDefaultStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an",
    "and", "any", "are", "as", "at", "be", "because", "been", "before", "being",
    "below", "between", "both", "but", "by", "can", "could", "did", "do", "does",
    "doing", "down", "during", "each", "either", "few", "for", "from", "further", "had",
    "has", "have", "having", "he", "her", "here", "hers", "him", "his", "how",
    "however", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
    "may", "me", "might", "more", "most", "must", "my", "neither", "no", "nor",
    "not", "now", "of", "off", "on", "once", "only", "or", "other", "our",
    "ours", "out", "over", "own", "same", "shall", "she", "should", "so", "some",
    "such", "than", "that", "the", "their", "theirs", "them", "then", "there", "these",
    "they", "this", "those", "through", "to", "too", "under", "until", "up", "upon",
    "very", "via", "was", "we", "were", "what", "when", "where", "whether", "which",
    "while", "who", "whom", "why", "will", "with", "within", "without", "would", "you",
    "your", "yours",
};

} // namespace

std::string_view default_stopwords_version() {
    return "en-function-words-v1";
}

const StopwordSet& default_stopwords() {
    static const StopwordSet words(std::begin(kDefaultStopwords), std::end(kDefaultStopwords));
    return words;
}

StopwordSet load_stopwords(std::istream& in) {
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        auto word = detail::trim(line);
        if (word.empty() || word.front() == '#') continue;
        std::string lowered(word);
        for (auto& c : lowered) c = detail::ascii_lower(c);
        words.insert(std::move(lowered));
    }
    return words;
}

} // namespace scimap
