package org.fixture;

/** The mode. */
public enum Mode { ON }
