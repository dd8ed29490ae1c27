from tqdm import tqdm


def wrap_iterator_with_progress_bar(iterator, progress_bar_name="Processing"):
    # tqdm writes to stderr, stdout stays reserved for results
    return tqdm(iterator, desc=progress_bar_name, leave=False)
