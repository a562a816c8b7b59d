"""Seeded desk-scale fixture corpus: 17 languages across 8 scripts.

Sentences are sampled from per-language banks of common words.  Related
languages share genuinely identical word forms (casa/gente/música across
Iberian Romance, hus/dag/musik across Scandinavian, water/school between
English and Dutch, plus a pan-Latin pool of international words), which
makes the Latin-script cluster realistically confusable.
"""

from __future__ import annotations

import numpy as np

from .corpus import Corpus, LoadReport, corpus_from_rows

# Order used when a subset of languages is requested: scripts diversify early.
CANONICAL_ORDER = (
    "en", "ru", "ar", "hi", "es", "el", "kn", "fr", "ml",
    "de", "ta", "it", "da", "nl", "pt", "sv", "tr",
)

_PAN_LATIN = ["hotel", "taxi", "radio", "piano", "film", "pizza", "metro", "tennis"]

WORD_BANKS: dict[str, list[str]] = {
    "en": [
        "the", "and", "house", "water", "day", "night", "good", "morning",
        "children", "school", "time", "people", "world", "city", "friend",
        "mother", "father", "book", "street", "light", "summer", "winter",
        "always", "never", "today", "tomorrow", "small", "large", "music",
        "language", "country", "garden", "window", "bread", "coffee", "work",
        "year", "hand", "heart", "door", "evening", "river", "white", "green",
    ] + _PAN_LATIN,
    "fr": [
        "le", "la", "les", "et", "maison", "eau", "jour", "nuit", "bon",
        "matin", "enfants", "école", "temps", "gens", "monde", "ville",
        "ami", "mère", "père", "livre", "rue", "lumière", "été", "hiver",
        "toujours", "jamais", "demain", "petit", "grand", "musique", "langue",
        "pays", "jardin", "fenêtre", "pain", "café", "travail", "année",
        "main", "cœur", "porte", "soir", "rivière", "blanc", "vert",
    ] + _PAN_LATIN,
    "de": [
        "der", "die", "das", "und", "haus", "wasser", "tag", "nacht", "gut",
        "morgen", "kinder", "schule", "zeit", "leute", "welt", "stadt",
        "freund", "mutter", "vater", "buch", "straße", "licht", "sommer",
        "winter", "immer", "nie", "heute", "klein", "groß", "musik",
        "sprache", "land", "garten", "fenster", "brot", "kaffee", "arbeit",
        "jahr", "hand", "herz", "tür", "abend", "fluss", "weiß", "grün",
    ] + _PAN_LATIN,
    "es": [
        "el", "la", "los", "y", "casa", "agua", "día", "noche", "bueno",
        "mañana", "niños", "escuela", "tiempo", "gente", "mundo", "ciudad",
        "amigo", "madre", "padre", "libro", "calle", "luz", "verano",
        "invierno", "siempre", "nunca", "hoy", "pequeño", "grande", "música",
        "lengua", "país", "jardín", "ventana", "pan", "café", "trabajo",
        "año", "mano", "corazón", "puerta", "tarde", "río", "blanco", "verde",
    ] + _PAN_LATIN,
    "pt": [
        "o", "a", "os", "e", "casa", "água", "dia", "noite", "bom", "manhã",
        "crianças", "escola", "tempo", "gente", "mundo", "cidade", "amigo",
        "mãe", "pai", "livro", "rua", "luz", "verão", "inverno", "sempre",
        "nunca", "hoje", "pequeno", "grande", "música", "língua", "país",
        "jardim", "janela", "pão", "café", "trabalho", "ano", "mão",
        "coração", "porta", "tarde", "rio", "branco", "verde",
    ] + _PAN_LATIN,
    "it": [
        "il", "la", "gli", "e", "casa", "acqua", "giorno", "notte", "buono",
        "mattina", "bambini", "scuola", "tempo", "gente", "mondo", "città",
        "amico", "madre", "padre", "libro", "strada", "luce", "estate",
        "inverno", "sempre", "mai", "oggi", "domani", "piccolo", "grande",
        "musica", "lingua", "paese", "giardino", "finestra", "pane", "caffè",
        "lavoro", "anno", "mano", "cuore", "porta", "sera", "fiume",
        "bianco", "verde",
    ] + _PAN_LATIN,
    "nl": [
        "de", "het", "en", "huis", "water", "dag", "nacht", "goed", "morgen",
        "kinderen", "school", "tijd", "mensen", "wereld", "stad", "vriend",
        "moeder", "vader", "boek", "straat", "licht", "zomer", "winter",
        "altijd", "nooit", "vandaag", "klein", "groot", "muziek", "taal",
        "land", "tuin", "raam", "brood", "koffie", "werk", "jaar", "hand",
        "hart", "deur", "avond", "rivier", "wit", "groen",
    ] + _PAN_LATIN,
    "sv": [
        "och", "en", "ett", "hus", "vatten", "dag", "natt", "bra", "morgon",
        "barn", "skola", "tid", "människor", "värld", "stad", "vän", "mor",
        "far", "bok", "gata", "ljus", "sommar", "vinter", "alltid", "aldrig",
        "idag", "imorgon", "liten", "stor", "musik", "språk", "land",
        "trädgård", "fönster", "bröd", "kaffe", "arbete", "år", "hand",
        "hjärta", "dörr", "kväll", "flod", "vit", "grön",
    ] + _PAN_LATIN,
    "da": [
        "og", "en", "et", "hus", "vand", "dag", "nat", "god", "morgen",
        "børn", "skole", "tid", "mennesker", "verden", "by", "ven", "mor",
        "far", "bog", "gade", "lys", "sommer", "vinter", "altid", "aldrig",
        "lille", "stor", "musik", "sprog", "land", "have", "vindue", "brød",
        "kaffe", "arbejde", "år", "hånd", "hjerte", "dør", "aften", "flod",
        "hvid", "grøn",
    ] + _PAN_LATIN,
    "tr": [
        "ve", "bir", "ev", "su", "gün", "gece", "iyi", "sabah", "çocuklar",
        "okul", "zaman", "insanlar", "dünya", "şehir", "arkadaş", "anne",
        "baba", "kitap", "sokak", "ışık", "yaz", "kış", "daima", "asla",
        "bugün", "yarın", "küçük", "büyük", "müzik", "dil", "ülke", "bahçe",
        "pencere", "ekmek", "kahve", "iş", "yıl", "el", "kalp", "kapı",
        "akşam", "nehir", "beyaz", "yeşil",
    ] + _PAN_LATIN,
    "ru": [
        "и", "дом", "вода", "день", "ночь", "хорошо", "утро", "дети",
        "школа", "время", "люди", "мир", "город", "друг", "мать", "отец",
        "книга", "улица", "свет", "лето", "зима", "всегда", "никогда",
        "сегодня", "завтра", "маленький", "большой", "музыка", "язык",
        "страна", "сад", "окно", "хлеб", "кофе", "работа", "год", "рука",
        "сердце", "дверь", "вечер", "река", "белый", "зелёный",
    ],
    "el": [
        "και", "σπίτι", "νερό", "μέρα", "νύχτα", "καλό", "πρωί", "παιδιά",
        "σχολείο", "χρόνος", "άνθρωποι", "κόσμος", "πόλη", "φίλος", "μητέρα",
        "πατέρας", "βιβλίο", "δρόμος", "φως", "καλοκαίρι", "χειμώνας",
        "πάντα", "ποτέ", "σήμερα", "αύριο", "μικρό", "μεγάλο", "μουσική",
        "γλώσσα", "χώρα", "κήπος", "παράθυρο", "ψωμί", "καφές", "δουλειά",
        "χέρι", "καρδιά", "πόρτα", "βράδυ", "ποτάμι", "άσπρο", "πράσινο",
    ],
    "ar": [
        "بيت", "ماء", "يوم", "ليل", "صباح", "أطفال", "مدرسة", "وقت", "ناس",
        "عالم", "مدينة", "صديق", "أم", "أب", "كتاب", "شارع", "نور", "صيف",
        "شتاء", "دائما", "أبدا", "اليوم", "غدا", "صغير", "كبير", "موسيقى",
        "لغة", "بلد", "حديقة", "نافذة", "خبز", "قهوة", "عمل", "سنة", "يد",
        "قلب", "باب", "مساء", "نهر", "أبيض", "أخضر", "جميل",
    ],
    "hi": [
        "और", "घर", "पानी", "दिन", "रात", "अच्छा", "सुबह", "बच्चे",
        "विद्यालय", "समय", "लोग", "दुनिया", "शहर", "दोस्त", "माता", "पिता",
        "किताब", "सड़क", "रोशनी", "गर्मी", "सर्दी", "हमेशा", "कभी", "आज",
        "कल", "छोटा", "बड़ा", "संगीत", "भाषा", "देश", "बगीचा", "खिड़की",
        "रोटी", "काम", "साल", "हाथ", "दिल", "दरवाजा", "शाम", "नदी",
        "सफेद", "हरा",
    ],
    "kn": [
        "ಮತ್ತು", "ಮನೆ", "ನೀರು", "ದಿನ", "ರಾತ್ರಿ", "ಒಳ್ಳೆಯದು", "ಬೆಳಿಗ್ಗೆ",
        "ಮಕ್ಕಳು", "ಶಾಲೆ", "ಸಮಯ", "ಜನರು", "ಜಗತ್ತು", "ನಗರ", "ಸ್ನೇಹಿತ",
        "ತಾಯಿ", "ತಂದೆ", "ಪುಸ್ತಕ", "ರಸ್ತೆ", "ಬೆಳಕು", "ಬೇಸಿಗೆ", "ಚಳಿಗಾಲ",
        "ಯಾವಾಗಲೂ", "ಎಂದಿಗೂ", "ಇಂದು", "ನಾಳೆ", "ಚಿಕ್ಕ", "ದೊಡ್ಡ", "ಸಂಗೀತ",
        "ಭಾಷೆ", "ದೇಶ", "ತೋಟ", "ಕಿಟಕಿ", "ರೊಟ್ಟಿ", "ಕಾಫಿ", "ಕೆಲಸ", "ವರ್ಷ",
        "ಕೈ", "ಹೃದಯ", "ಬಾಗಿಲು", "ಸಂಜೆ", "ನದಿ", "ಬಿಳಿ", "ಹಸಿರು",
    ],
    "ml": [
        "വീട്", "വെള്ളം", "ദിവസം", "രാത്രി", "നല്ലത്", "രാവിലെ",
        "കുട്ടികൾ", "വിദ്യാലയം", "സമയം", "ആളുകൾ", "ലോകം", "നഗരം",
        "സുഹൃത്ത്", "അമ്മ", "അച്ഛൻ", "പുസ്തകം", "തെരുവ്", "വെളിച്ചം",
        "വേനൽ", "തണുപ്പ്", "എപ്പോഴും", "ഒരിക്കലും", "ഇന്ന്", "നാളെ",
        "ചെറിയ", "വലിയ", "സംഗീതം", "ഭാഷ", "രാജ്യം", "തോട്ടം", "ജനാല",
        "അപ്പം", "കാപ്പി", "ജോലി", "വർഷം", "കൈ", "ഹൃദയം", "വാതിൽ",
        "വൈകുന്നേരം", "നദി", "വെളുപ്പ്", "പച്ച",
    ],
    "ta": [
        "மற்றும்", "வீடு", "தண்ணீர்", "நாள்", "இரவு", "நல்லது", "காலை",
        "குழந்தைகள்", "பள்ளி", "நேரம்", "மக்கள்", "உலகம்", "நகரம்",
        "நண்பன்", "அம்மா", "அப்பா", "புத்தகம்", "தெரு", "ஒளி", "கோடை",
        "குளிர்", "எப்போதும்", "ஒருபோதும்", "இன்று", "நாளை", "சிறிய",
        "பெரிய", "இசை", "மொழி", "நாடு", "தோட்டம்", "ஜன்னல்", "ரொட்டி",
        "காபி", "வேலை", "ஆண்டு", "கை", "இதயம்", "கதவு", "மாலை", "நதி",
        "வெள்ளை", "பச்சை",
    ],
}


def fixture_rows(
    languages: int = 17,
    docs_per_language: int = 200,
    seed: int = 42,
    min_words: int = 3,
    max_words: int = 9,
) -> list[tuple[str, str]]:
    """Raw (text, language_code) rows, capitalized with a trailing period."""
    if not 2 <= languages <= len(CANONICAL_ORDER):
        raise ValueError(f"languages must be in [2, {len(CANONICAL_ORDER)}]")
    if docs_per_language < 1:
        raise ValueError("docs_per_language must be >= 1")
    rng = np.random.default_rng(seed)
    rows: list[tuple[str, str]] = []
    for code in CANONICAL_ORDER[:languages]:
        bank = WORD_BANKS[code]
        for _ in range(docs_per_language):
            k = int(rng.integers(min_words, max_words + 1))
            words = [bank[int(i)] for i in rng.integers(0, len(bank), size=k)]
            sentence = " ".join(words)
            rows.append((sentence[0].upper() + sentence[1:] + ".", code))
    return rows


def fixture_corpus(
    languages: int = 17,
    docs_per_language: int = 200,
    seed: int = 42,
    min_words: int = 3,
    max_words: int = 9,
) -> tuple[Corpus, LoadReport]:
    """Normalized fixture corpus plus its load report."""
    rows = fixture_rows(languages, docs_per_language, seed, min_words, max_words)
    return corpus_from_rows(rows)
